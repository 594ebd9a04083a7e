from itertools import combinations

import pytest

from branchkit import gaussian_binomial, p_k_n, pi, qpoly_str


def pi_by_enumeration(n, k, d):
    """Independent count: partitions of d, at most k parts, parts at most n."""
    if d < 0:
        return 0

    def rec(remaining, largest, slots):
        if remaining == 0:
            return 1
        if slots == 0:
            return 0
        return sum(
            rec(remaining - p, p, slots - 1)
            for p in range(1, min(largest, remaining) + 1)
        )

    return rec(d, n, k)


def strict_tuples_by_enumeration(k, n, d):
    """Independent count of strictly decreasing k-tuples from 1..n summing to d."""
    return sum(1 for c in combinations(range(1, n + 1), k) if sum(c) == d)


def qbinom_by_pascal(a, b):
    """Independent Gaussian binomial via (a b)_q = (a-1 b-1)_q + q^b (a-1 b)_q."""
    if b == 0 or b == a:
        return {0: 1}
    left = qbinom_by_pascal(a - 1, b - 1)
    right = qbinom_by_pascal(a - 1, b)
    out = dict(left)
    for e, c in right.items():
        out[e + b] = out.get(e + b, 0) + c
    return out


def test_pi_base_cases():
    for n in range(0, 5):
        for k in range(0, 5):
            assert pi(n, k, 0) == 1
    assert pi(3, 2, -1) == 0
    assert pi(0, 4, 2) == 0
    assert pi(4, 0, 2) == 0
    assert pi(2, 2, 2) == 2  # (2) and (1,1)


def test_pi_rejects_negative_bounds():
    with pytest.raises(ValueError):
        pi(-1, 2, 1)
    with pytest.raises(ValueError):
        pi(2, -1, 1)


def test_pi_matches_enumeration():
    for n in range(0, 7):
        for k in range(0, 7):
            for d in range(-2, n * k + 3):
                assert pi(n, k, d) == pi_by_enumeration(n, k, d), (n, k, d)


def test_pi_symmetries():
    for n in range(0, 9):
        for k in range(0, 9):
            for d in range(0, n * k + 1):
                assert pi(n, k, d) == pi(k, n, d)
                assert pi(n, k, d) == pi(n, k, n * k - d)


def test_p_k_n_examples():
    assert p_k_n(2, 4, 4) == 1  # only (3,1)
    assert p_k_n(2, 5, 5) == 2  # (4,1) and (3,2)
    for n in range(1, 6):
        for d in range(-1, n + 3):
            assert p_k_n(1, n, d) == (1 if 1 <= d <= n else 0)


def test_p_k_n_bijection_with_boxed_partitions():
    for n in range(1, 10):
        for k in range(1, n + 1):
            top = k * n
            for d in range(0, top + 2):
                assert p_k_n(k, n, d) == strict_tuples_by_enumeration(k, n, d), (k, n, d)


def test_p_k_n_validation():
    with pytest.raises(ValueError):
        p_k_n(0, 3, 1)
    assert p_k_n(5, 3, 6) == 0  # more parts than values available


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1) == {0: 1, 1: 1}
    assert gaussian_binomial(4, 2) == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    for a in range(0, 8):
        assert gaussian_binomial(a, 0) == {0: 1}
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3)


def test_gaussian_binomial_matches_pascal_recurrence():
    for a in range(0, 15):
        for b in range(0, a + 1):
            assert gaussian_binomial(a, b) == qbinom_by_pascal(a, b), (a, b)


def test_gaussian_binomial_generating_function_coefficients():
    # coefficient of q^d in (n+k choose k)_q is pi(n, k, d)
    for n in range(0, 8):
        for k in range(0, 8):
            g = gaussian_binomial(n + k, k)
            for d in range(0, n * k + 1):
                assert g.get(d, 0) == pi(n, k, d)
            assert max(g, default=0) == n * k


def test_gaussian_binomial_palindromic():
    for a in range(1, 12):
        for b in range(0, a + 1):
            g = gaussian_binomial(a, b)
            deg = b * (a - b)
            assert all(g[e] == g[deg - e] for e in g)


def test_gaussian_binomial_pairwise_distinct():
    for n in range(2, 13):
        seen = {}
        for i in range(1, n // 2 + 1):
            key = tuple(sorted(gaussian_binomial(n, i).items()))
            assert key not in seen, f"({n},{i})_q == ({n},{seen[key]})_q"
            seen[key] = i


def test_qpoly_str():
    assert qpoly_str({0: 1, 1: 1}) == "1 + q"
    assert qpoly_str({0: 1, 2: 3}) == "1 + 3q^2"
    assert qpoly_str({}) == "0"
