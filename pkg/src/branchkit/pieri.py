"""Vertical-strip Pieri sets.

Tensoring L(lambda) with the wedge power L(w_k) decomposes multiplicity-free
over the set P(lambda, k): add k boxes to the Young diagram of lambda, at
most one per row (rows 1..n, row n starting empty), keep the results that
are still diagrams, and remove the full column of height n whenever row n
received a box (the determinant twist e_1 + ... + e_n = 0).
"""

from .weights import DominantWeight, omega_to_partition, partition_to_omega


def pieri_set(w: DominantWeight, k: int) -> set[DominantWeight]:
    """All dominant weights obtained from w by adding a k-box vertical strip.

    Enumerates the row subsets receiving a box in row order, pruning choices
    that break weak decrease or cannot place the remaining boxes.  Distinct
    subsets give distinct reduced weights, so the set size equals the number
    of valid subsets.
    """
    n = w.rank
    if not 1 <= k <= n - 1:
        raise ValueError(f"strip size {k} out of range for rank {n}")
    lam = omega_to_partition(w)
    lam = list(lam) + [0] * (n - len(lam))

    out: set[DominantWeight] = set()

    def place(row, prev, left, acc):
        if n - row < left:
            return
        if row == n:
            mu = acc
            if mu[-1]:
                # row n got a box: full column of height n, subtract it off
                mu = tuple(x - mu[-1] for x in mu)
            out.add(partition_to_omega(mu, n))
            return
        if lam[row] <= prev:
            place(row + 1, lam[row], left, acc + (lam[row],))
        if left and lam[row] + 1 <= prev:
            place(row + 1, lam[row] + 1, left - 1, acc + (lam[row] + 1,))

    place(0, lam[0] + 1, k, ())
    return out


def lex_max_member(w: DominantWeight, k: int) -> DominantWeight:
    """lambda + w_k: one box into each of rows 1..k, the lex maximum of the Pieri set."""
    n = w.rank
    if not 1 <= k <= n - 1:
        raise ValueError(f"strip size {k} out of range for rank {n}")
    coeffs = list(w.coeffs)
    coeffs[k - 1] += 1
    return DominantWeight(n, tuple(coeffs))
