"""Clifford-valued solutions and the Dirac operator.

Run:  python demos/04_spinor_dirac.py

The spinor story runs inside polynomials valued in the Clifford algebra
under left multiplication: the left regular representation is faithful,
so annihilation statements proved here transfer to any spinor module.
Kernels are right modules over the algebra, which is why brute-force
dimensions come in multiples of the blade count.
"""

from fractions import Fraction

from vermaops import (
    SYMBOLIC,
    CliffordPolynomial,
    Signature,
    apply_spinor_P,
    brute_force_spinor_sol,
    clifford_mul,
    dirac,
    monogenic_basis,
    spinor_singular_F,
)
from vermaops.polynomial import MultiPolynomial, xi


def main():
    sig = Signature(2, 3)

    print("generator relations:")
    for i in (1, 2, 3):
        e = CliffordPolynomial.blade((i,))
        print(f"  e_{i}^2 = {clifford_mul(e, e, sig).text()}")

    F = CliffordPolynomial.scalar(MultiPolynomial.monomial([(xi(1), 2)]))
    print(f"\nD^2 on xi_1^2: {dirac(dirac(F, sig), sig).text()}"
          "  (minus the signature Laplacian)")

    print("\nClifford-valued singular vectors, symbolic parameter:")
    for K in range(4):
        print(f"  F_{K} = {spinor_singular_F(K, SYMBOLIC, sig).text()}")

    print("\nannihilated by the tangential operators, identically:")
    F2 = spinor_singular_F(2, SYMBOLIC, sig)
    for j in (1, 2):
        print(f"  S_{j}(L) F_2 = {apply_spinor_P(j, SYMBOLIC, F2, sig).text()}")

    lam = Fraction(1, 5)
    print(f"\nbrute-force kernels at lam = {lam} (right modules, so"
          " multiples of 8):")
    for K in range(3):
        sol = brute_force_spinor_sol(K, lam, sig)
        print(f"  degree {K}: dimension {sol.dimension} "
              f"(even block {sol.even_block_dim}, odd block {sol.odd_block_dim})")

    print("\nmonogenic spaces (kernel of D per degree):")
    for j in range(3):
        print(f"  degree {j}: dimension {len(monogenic_basis(j, sig))}")

    lam = Fraction(1, 2)
    deg = int(lam + Fraction(1, 2))
    basis = monogenic_basis(deg, sig)
    checks = all(apply_spinor_P(j, lam, F, sig).is_zero()
                 for F in basis for j in (1, 2, 3))
    print(f"\nat lam = {lam} every monogenic element of degree {deg} solves"
          f" the full system: {checks}")


if __name__ == "__main__":
    main()
