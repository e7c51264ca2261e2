"""Singular vectors on the Fourier side: closed form against brute force.

Run:  python demos/02_singular_vectors.py

The degree-K solution w_K of the tangential system P_j w = 0 is built
from the renormalized inflated Gegenbauer family.  The brute-force
route knows nothing about special functions: it assembles the operator
matrices on a monomial basis and computes an exact kernel.  At generic
rational parameters the two routes agree line for line; at natural
parameters the kernel jumps by a space of harmonic polynomials.
"""

from fractions import Fraction

from vermaops import (
    SYMBOLIC,
    Signature,
    apply_P,
    brute_force_sol,
    classify_sol,
    closed_form_w,
    harmonic_dimension,
)


def main():
    sig = Signature(2, 3)
    print(f"signature (p,q) = (2,3), n = {sig.n}, eps = {sig.epsilon}\n")

    print("closed-form solutions with symbolic density parameter L:")
    for K in range(5):
        w = closed_form_w(K, SYMBOLIC, sig)
        print(f"  w_{K} = {w.text()}")

    print("\nannihilation, identically in L:")
    for K in range(5):
        w = closed_form_w(K, SYMBOLIC, sig)
        residuals = [apply_P(j, SYMBOLIC, w, sig).text() for j in (1, 2)]
        print(f"  P_1 w_{K} = {residuals[0]},  P_2 w_{K} = {residuals[1]}")

    lam = Fraction(1, 3)
    print(f"\nbrute force at the generic parameter lam = {lam}:")
    for K in range(4):
        sol = brute_force_sol(K, lam, sig)
        print(f"  degree {K}: dimension {sol.dimension}, kinds "
              f"{[e.kind for e in sol.entries]}")

    lam = Fraction(1)
    print(f"\nbrute force at the natural parameter lam = {lam}:")
    pred = classify_sol(lam, sig)
    for K in range(4):
        sol = brute_force_sol(K, lam, sig)
        print(f"  degree {K}: dimension {sol.dimension} "
              f"(predicted {pred.dimension(K)})")
    print(f"  the jump in degree {int(lam) + 1} is the harmonic space of "
          f"dimension {harmonic_dimension(int(lam) + 1, sig.n)}")

    print("\nambient system (all n operators) at lam = -1/2:")
    for K in range(4):
        sol = brute_force_sol(K, Fraction(-1, 2), sig, ambient=True)
        vecs = [e.vector.text() for e in sol.entries]
        print(f"  degree {K}: dimension {sol.dimension} {vecs}")


if __name__ == "__main__":
    main()
