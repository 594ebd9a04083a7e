"""Dominant weights of sl_n and the weight <-> partition dictionary.

A dominant integral weight lambda = a_1 w_1 + ... + a_{n-1} w_{n-1} (w_i the
fundamental weights, a_i >= 0) corresponds to the partition of suffix sums
lambda_i = a_i + a_{i+1} + ... + a_{n-1}.  Partitions are plain tuples in
canonical form (weakly decreasing, no trailing zeros), so one type serves as
Young diagram shape, highest weight, and Jordan type alike.

Everything here is pure and exact; dimensions use Python's arbitrary
precision integers.
"""

from dataclasses import dataclass
from itertools import zip_longest
from math import prod

Partition = tuple[int, ...]


def canonical_partition(parts) -> Partition:
    """Validate an iterable as a partition and strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"partition parts must be nonnegative, got {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing, got {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


@dataclass(frozen=True)
class DominantWeight:
    """A dominant integral weight of sl_n in fundamental-weight coordinates."""

    rank: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if self.rank < 2:
            raise ValueError(f"rank must be >= 2, got {self.rank}")
        if len(self.coeffs) != self.rank - 1:
            raise ValueError(
                f"need {self.rank - 1} coefficients for rank {self.rank}, "
                f"got {len(self.coeffs)}"
            )
        if any(a < 0 for a in self.coeffs):
            raise ValueError(f"weight {self.coeffs} is not dominant")

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls(rank, (0,) * (rank - 1))

    @classmethod
    def omega(cls, rank: int, k: int) -> "DominantWeight":
        """The k-th fundamental weight, 1 <= k <= rank - 1."""
        if not 1 <= k <= rank - 1:
            raise ValueError(f"omega index {k} out of range for rank {rank}")
        return cls(rank, tuple(1 if i == k else 0 for i in range(1, rank)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coeffs, start=1):
            if a == 1:
                terms.append(f"w{i}")
            elif a > 1:
                terms.append(f"{a}w{i}")
        return " + ".join(terms) if terms else "0"


def omega_to_partition(w: DominantWeight) -> Partition:
    """Partition (lambda_1, ..., lambda_{n-1}) of suffix sums of the coefficients."""
    parts = []
    total = 0
    for a in reversed(w.coeffs):
        total += a
        parts.append(total)
    parts.reverse()
    return canonical_partition(parts)


def partition_to_omega(parts, rank: int) -> DominantWeight:
    """Inverse dictionary: a_i = lambda_i - lambda_{i+1}.

    Accepts trailing zeros; raises if the partition needs more than rank - 1
    nonzero parts.
    """
    p = canonical_partition(parts)
    if len(p) > rank - 1:
        raise ValueError(f"partition {p} has too many parts for rank {rank}")
    padded = p + (0,) * (rank - len(p))
    return DominantWeight(rank, tuple(padded[i] - padded[i + 1] for i in range(rank - 1)))


def lex_compare(p, q) -> int:
    """Three-way lexicographic comparison of partitions; absent parts read as 0."""
    for a, b in zip_longest(p, q, fillvalue=0):
        if a != b:
            return -1 if a < b else 1
    return 0


def dual_weight(w: DominantWeight) -> DominantWeight:
    """Highest weight of the dual representation: reverse the coefficients."""
    return DominantWeight(w.rank, w.coeffs[::-1])


def dim_irrep(w: DominantWeight) -> int:
    """Dimension of L(w) by the Weyl product, as an exact integer.

    With l_i = lambda_i + n - i (lambda_n = 0), the dimension is
    prod_{i<j} (l_i - l_j) / (j - i); the quotient is taken once at the end
    so all arithmetic stays integral.
    """
    n = w.rank
    lam = omega_to_partition(w)
    l = [(lam[i] if i < len(lam) else 0) + n - 1 - i for i in range(n)]
    num = prod(l[i] - l[j] for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def iter_partitions(total: int, max_parts: int | None = None, max_part: int | None = None):
    """Yield the partitions of `total` with the given bounds, lex-descending."""
    if total < 0:
        return
    max_parts = total if max_parts is None else max_parts
    max_part = total if max_part is None else max_part

    def rec(remaining, bound, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(total, max_part, max_parts)


def iter_dominant_weights(rank: int, max_boxes: int):
    """All dominant weights of sl_rank whose partition has at most max_boxes boxes.

    Ordered by box count, then lex-descending within each count.
    """
    for boxes in range(max_boxes + 1):
        for p in iter_partitions(boxes, max_parts=rank - 1):
            yield partition_to_omega(p, rank)
