"""Restricted partition counts and Gaussian binomial polynomials.

pi(n, k, d) counts partitions of d into at most k parts of size at most n --
the coefficient of q^d in the Gaussian binomial (n+k choose k)_q.  p_k_n
counts strictly decreasing k-tuples from {1, ..., n} with a prescribed sum;
subtracting the staircase (k, k-1, ..., 1) maps them bijectively onto the
boxed partitions counted by pi.
"""

from functools import cache

QPolynomial = dict[int, int]


def pi(n: int, k: int, d: int) -> int:
    """Number of partitions of d with at most k parts, each part at most n.

    Recurrence: pi(n,k,d) = pi(n-1,k,d) + pi(n,k-1,d-n), peeling off whether
    any part equals n.  d is normalized by the complement-in-a-box symmetry
    d -> min(d, nk - d) before hitting the shared memo table.
    """
    if n < 0 or k < 0:
        raise ValueError(f"pi needs n, k >= 0, got n={n}, k={k}")
    if d < 0 or d > n * k:
        return 0
    return _pi_normalized(n, k, min(d, n * k - d))


@cache
def _pi_normalized(n, k, d):
    if d == 0:
        return 1
    # d >= 1 here, hence n, k >= 1
    return pi(n - 1, k, d) + pi(n, k - 1, d - n)


def p_k_n(k: int, n: int, d: int) -> int:
    """Number of strictly decreasing k-tuples from {1, ..., n} summing to d."""
    if k < 1 or n < 1:
        raise ValueError(f"p_k_n needs k, n >= 1, got k={k}, n={n}")
    if k > n:
        return 0
    return pi(n - k, k, d - k * (k + 1) // 2)


def gaussian_binomial(a: int, b: int) -> QPolynomial:
    """The q-binomial (a choose b)_q as a sparse {exponent: coefficient} map.

    Coefficient of q^d is pi(a - b, b, d); the degree is b(a - b) and the
    coefficient list is palindromic.
    """
    if not 0 <= b <= a:
        raise ValueError(f"gaussian_binomial needs 0 <= b <= a, got a={a}, b={b}")
    out = {}
    for d in range(b * (a - b) + 1):
        c = pi(a - b, b, d)
        if c:
            out[d] = c
    return out


def qpoly_str(poly: QPolynomial) -> str:
    """Render {2: 3, 0: 1} as '1 + 3q^2'."""
    if not poly:
        return "0"
    terms = []
    for e in sorted(poly):
        c = poly[e]
        if e == 0:
            terms.append(str(c))
        else:
            q = "q" if e == 1 else f"q^{e}"
            terms.append(q if c == 1 else f"{c}{q}")
    return " + ".join(terms)
