"""Gaussian binomials, boxed partition counts, and principal branching.

pi(n, k, d) counts partitions of d inside a k x n box; these are exactly the
coefficients of the Gaussian binomial (n+k choose k)_q, and differences of
neighbouring counts are the multiplicities of principal branchings --
the Cayley-Sylvester formula.
"""

from branchkit import (
    SubalgebraType,
    fundamental_branching,
    gaussian_binomial,
    p_k_n,
    pi,
    qpoly_str,
)

if __name__ == "__main__":
    print("Gaussian binomial triangle (rows a = 0..6):\n")
    for a in range(7):
        row = "   ".join(qpoly_str(gaussian_binomial(a, b)) for b in range(a + 1))
        print(f"  a={a}:  {row}")

    print("\ncoefficients of (6 choose 2)_q vs boxed partition counts pi(4, 2, d):")
    g = gaussian_binomial(6, 2)
    print(f"  {qpoly_str(g)}")
    print(f"  pi(4,2,d) for d=0..8: {[pi(4, 2, d) for d in range(9)]}")
    assert all(g.get(d, 0) == pi(4, 2, d) for d in range(9))

    print("\npalindromic symmetry pi(n,k,d) = pi(n,k,nk-d) and pi(n,k,d) = pi(k,n,d):")
    print(f"  pi(5,3,4) = {pi(5, 3, 4)} = pi(3,5,4) = {pi(3, 5, 4)} = pi(5,3,11) = {pi(5, 3, 11)}")

    print("\nstrict tuples vs boxed partitions (staircase bijection):")
    print(f"  p_2^5(5) = {p_k_n(2, 5, 5)}  (the tuples (4,1) and (3,2))")
    print(f"  pi(3, 2, 2) = {pi(3, 2, 2)}  (the partitions (2) and (1,1))")

    print("\ndistinct q-binomials (n choose i)_q for i <= n/2, here n = 8:")
    for i in range(1, 5):
        print(f"  i={i}: {qpoly_str(gaussian_binomial(8, i))}")

    print("\nneighbouring-coefficient differences give principal multiplicities:")
    n, k = 8, 3
    mv = fundamental_branching(SubalgebraType((n,)), k)
    diffs = {
        j: pi(n - k, k, (k * (n - k) - j) // 2) - pi(n - k, k, (k * (n - k) - j) // 2 - 1)
        for j in range(k * (n - k) + 1)
        if (k * (n - k) - j) % 2 == 0
    }
    diffs = {j: m for j, m in diffs.items() if m}
    print(f"  sl_{n}, k={k}: {diffs}")
    assert diffs == mv
    print("  ... which matches the weight-multiset decomposition exactly.")
