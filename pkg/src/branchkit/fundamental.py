"""Branching of the fundamental (wedge power) representations L(w_k).

The universal method: the H-eigenvalue of a natural basis vector
e_{i_1} ^ ... ^ e_{i_k} is the sum of the k chosen diagonal entries of H, so
the full weight multiset of Res L(w_k) is the multiset of k-subset sums of
h_diagonal, and the multiplicity of F_j falls out as dim V_j - dim V_{j+2}.

Closed forms double as fast paths and cross-checks:
  * principal type: strict-tuple counts, the Cayley-Sylvester partition-count
    difference, and Macdonald's plethysm formulas for k = 2, 3;
  * type [r, 1, ..., 1] and type [r, s] for k up to floor(n/2);
  * k = 2 for arbitrary type.
"""

from collections import Counter
from itertools import combinations
from math import comb

from .qcomb import p_k_n, pi
from .sl2 import MultVector, cg_convolve
from .subalgebra import SubalgebraType, h_diagonal, is_principal

WeightMultiset = Counter

# enumeration guard: C(n, k) subsets get generated explicitly
DEFAULT_MAX_RANK = 30


class CorruptMultisetError(ValueError):
    """The multiset is not the weight system of any sl_2 representation."""


def wedge_weight_multiset(t: SubalgebraType, k: int, max_rank: int = DEFAULT_MAX_RANK) -> WeightMultiset:
    """Multiset of k-subset sums of the diagonal of H; total count C(n, k)."""
    n = t.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"wedge power index {k} out of range for rank {n}")
    if n > max_rank:
        raise ValueError(
            f"rank {n} exceeds the enumeration cap {max_rank}; "
            f"raise max_rank to force the computation"
        )
    h = h_diagonal(t)
    return Counter(sum(c) for c in combinations(h, k))


def mult_from_multiset(ms: WeightMultiset) -> MultVector:
    """Multiplicities m_j = dim V_j - dim V_{j+2} of a symmetric weight multiset."""
    for j, c in ms.items():
        if ms.get(-j, 0) != c:
            raise CorruptMultisetError(
                f"weight multiset not symmetric under negation at {j}: "
                f"{c} vs {ms.get(-j, 0)}"
            )
    out: MultVector = {}
    top = max(ms) if ms else -1
    for j in range(0, top + 1):
        m = ms.get(j, 0) - ms.get(j + 2, 0)
        if m < 0:
            raise CorruptMultisetError(
                f"dim V_{j} < dim V_{j + 2}: not a representation weight system"
            )
        if m:
            out[j] = m
    return out


def mult_strict_count(n: int, k: int, j: int) -> int:
    """mult(F_j : Res L(w_k)) for principal type, via strict-tuple counts.

    The weight-j space of the k-th wedge power is spanned by the strictly
    increasing index tuples with i_1 + ... + i_k = (kn - j + k) / 2.
    """
    if j < 0 or (k * n - j + k) % 2:
        return 0
    d = (k * n - j + k) // 2
    return p_k_n(k, n, d) - p_k_n(k, n, d - 1)


def mult_cayley_sylvester(n: int, k: int, j: int) -> int:
    """mult(F_j : Res L(w_k)) for principal type, by the Cayley-Sylvester formula."""
    if j < 0 or j > k * (n - k) or (k * (n - k) - j) % 2:
        return 0
    d = (k * (n - k) - j) // 2
    return pi(n - k, k, d) - pi(n - k, k, d - 1)


def mult_macdonald(n: int, k: int, j: int) -> int:
    """Principal-type multiplicity by Macdonald's closed plethysm formulas.

    k = 2: exactly one copy of F_j when lambda_2 = (2n - j - 4)/2 is a
    nonnegative even integer, none otherwise.

    k = 3: with mu = (mu_1, mu_2, 0), mu_1 = (3n + j - 9)/2 and
    mu_2 = (3n - j - 9)/2, the multiplicity is floor(m/6) + eps where
    m = min(mu_1 - mu_2, mu_2) and eps is 1 when m and mu_2 are both even or
    when m is 3 or 5 mod 6.  Non-integral or non-partition mu means F_j is
    absent.
    """
    if k == 2:
        if n < 3:
            raise ValueError(f"k=2 needs n >= 3, got {n}")
        if j < 0 or (2 * n - j - 4) % 2:
            return 0
        lam1 = (2 * n + j - 4) // 2
        lam2 = (2 * n - j - 4) // 2
        if lam2 < 0 or lam1 < lam2:
            return 0
        return 1 if lam2 % 2 == 0 else 0
    if k == 3:
        if n < 4:
            raise ValueError(f"k=3 needs n >= 4, got {n}")
        if j < 0 or (3 * n - j - 9) % 2:
            return 0
        mu1 = (3 * n + j - 9) // 2
        mu2 = (3 * n - j - 9) // 2
        if mu2 < 0 or mu1 < mu2:
            return 0
        m = min(mu1 - mu2, mu2)
        eps = 1 if (m % 2 == 0 and mu2 % 2 == 0) or m % 6 in (3, 5) else 0
        return m // 6 + eps
    raise ValueError(f"closed plethysm formulas cover k in {{2, 3}}, got k={k}")


_FUND_CACHE: dict[tuple[tuple[int, ...], int], MultVector] = {}


def fundamental_branching(
    t: SubalgebraType,
    k: int,
    verify: bool = False,
    max_rank: int = DEFAULT_MAX_RANK,
) -> MultVector:
    """Decomposition of Res L(w_k) as a multiplicity vector.

    Always computed from the weight multiset (defined for every type and k);
    with verify=True every applicable closed form is evaluated as well and a
    disagreement raises.  Results are memoized per (type, k).
    """
    n = t.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"wedge power index {k} out of range for rank {n}")
    key = (t.blocks, k)
    cached = _FUND_CACHE.get(key)
    if cached is None:
        cached = mult_from_multiset(wedge_weight_multiset(t, k, max_rank=max_rank))
        _FUND_CACHE[key] = cached
    result = dict(cached)
    if verify:
        _verify_closed_forms(t, k, result)
    return result


def _verify_closed_forms(t, k, result):
    n = t.n
    checks = []
    if is_principal(t):
        top = k * (n - k)
        for name, f in (("strict-count", mult_strict_count),
                        ("cayley-sylvester", mult_cayley_sylvester)):
            checks.append((name, {j: m for j in range(top + 1) if (m := f(n, k, j))}))
        if k in (2, 3):
            checks.append(
                ("macdonald", {j: m for j in range(top + 1) if (m := mult_macdonald(n, k, j))})
            )
    if k == 2 and n >= 3:
        checks.append(("k2-general", branching_k2_general(t)))
    if len(t.blocks) == 2 and 1 <= k <= n // 2:
        checks.append(("two-blocks", branching_two_blocks(t, k)))
    if all(d == 1 for d in t.blocks[1:]) and (len(t.blocks) == 1 or k <= n // 2):
        checks.append(("hook", branching_hook(t, k)))
    for name, other in checks:
        if other != result:
            raise AssertionError(
                f"closed form {name} disagrees with weight multiset for {t}, k={k}: "
                f"{other} vs {result}"
            )


def _principal_factor(r: int, m: int) -> MultVector:
    """Res of L(w_m) of sl_r to the principal subalgebra, reading w_0 and w_r as F_0."""
    if m == 0 or m == r:
        return {0: 1}
    return fundamental_branching(SubalgebraType((r,)), m)


def branching_k2_general(t: SubalgebraType) -> MultVector:
    """Res L(w_2) for an arbitrary type.

    Pairs drawn inside a block of size d >= 3 contribute the principal
    Res L(w_2) of sl_d, a pair inside a size-2 block sums to zero (one F_0
    each), and pairs straddling blocks i < j contribute
    F_{d_i - 1} (x) F_{d_j - 1}.
    """
    n = t.n
    if n < 3:
        raise ValueError(f"k=2 needs rank >= 3, got {n}")
    acc: Counter = Counter()
    for d in t.blocks:
        if d >= 3:
            acc.update(fundamental_branching(SubalgebraType((d,)), 2))
        elif d == 2:
            acc[0] += 1
    for i, di in enumerate(t.blocks):
        for dj in t.blocks[i + 1:]:
            acc.update(cg_convolve({di - 1: 1}, {dj - 1: 1}))
    return dict(sorted(acc.items()))


def branching_hook(t: SubalgebraType, k: int) -> MultVector:
    """Res L(w_k) for type [r, 1, ..., 1].

    Basis vectors split by how many indices j land in the zero tail:
    sum_{j=k-alpha}^{beta} C(n-r, j) Res_{[r]} L(w_{k-j})  +  C(n-r, k) F_0,
    with alpha = min(k, r) and beta = min(k-1, n-r).
    """
    n = t.n
    r = t.blocks[0]
    if any(d != 1 for d in t.blocks[1:]):
        raise ValueError(f"type {t} is not of shape [r, 1, ..., 1]")
    ones = n - r
    if not 1 <= k <= n - 1:
        raise ValueError(f"wedge power index {k} out of range for rank {n}")
    if ones and k > n // 2:
        raise ValueError(f"hook formula covers k <= {n // 2} for rank {n}, got k={k}")
    alpha = min(k, r)
    beta = min(k - 1, ones)
    acc: Counter = Counter()
    for j in range(k - alpha, beta + 1):
        c = comb(ones, j)
        for d, m in _principal_factor(r, k - j).items():
            acc[d] += c * m
    if ones >= k:
        acc[0] += comb(ones, k)
    return dict(sorted(acc.items()))


def branching_two_blocks(t: SubalgebraType, k: int) -> MultVector:
    """Res L(w_k) for type [r, s]: sum over how many indices fall in the
    second block, sum_{j=0}^{min(k,s)} Res_{[r]} L(w_{k-j}) (x) Res_{[s]} L(w_j)."""
    if len(t.blocks) != 2:
        raise ValueError(f"type {t} does not have exactly two blocks")
    r, s = t.blocks
    n = t.n
    if not 1 <= k <= n // 2:
        raise ValueError(f"two-block formula covers 1 <= k <= {n // 2} for rank {n}, got k={k}")
    acc: Counter = Counter()
    for j in range(0, min(k, s) + 1):
        acc.update(cg_convolve(_principal_factor(r, k - j), _principal_factor(s, j)))
    return dict(sorted(acc.items()))
