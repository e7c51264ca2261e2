"""Equivariant boundary operators and their machine-checked equivariance.

Run:  python demos/03_boundary_operators.py

The stencils below differentiate a function on the ambient space and
restrict to the hyperplane x_n = 0.  Equivariance is an exact operator
identity; we verify it by composing both ways on every monomial up to a
degree bound.  The factorization at special parameters (the order-2
operator degenerating to the tangential wave operator) drops out of the
same coefficients.
"""

from fractions import Fraction

from vermaops import (
    SYMBOLIC,
    Signature,
    apply_and_restrict,
    build_ambient_operator,
    build_operator,
    verify_intertwining,
)
from vermaops.polynomial import MultiPolynomial, x


def main():
    sig = Signature(2, 3)

    print("order-2 scalar stencil, symbolic parameter:")
    st = build_operator(2, SYMBOLIC, sig)
    for t in st.terms:
        print(f"  ({t.coeff.text()}) * (-Box')^{t.boxprime_power}"
              f" * d_n^{t.dn_power}")

    u = MultiPolynomial.monomial([(x(3), 2)])
    print(f"\napplied to x_3^2 and restricted: {apply_and_restrict(st, u).text()}")

    print("\nspinor stencil of order 3 (Clifford factors carry the metric"
          " signs):")
    st3 = build_operator(3, SYMBOLIC, sig, spinor=True)
    for t in st3.terms:
        print(f"  ({t.coeff.text()}) * (Box')^{t.boxprime_power}"
              f" * d_n^{t.dn_power} * {t.clifford_factor}")

    print("\nequivariance checks (exact, every monomial of degree <= 3):")
    for spinor in (False, True):
        for K in (1, 2, 3):
            rep = verify_intertwining(K, Fraction(1, 5), ("nplus", 1), 3, sig,
                                      spinor=spinor)
            kind = "spinor" if spinor else "scalar"
            print(f"  {kind} K={K}: ok={rep.ok} over {rep.cases} inputs")

    print("\nfactorization at the special parameter (n-3)/2:")
    st = build_operator(2, Fraction(sig.n - 3, 2), sig)
    live = [(t.coeff.text(), t.boxprime_power, t.dn_power)
            for t in st.terms if not t.coeff.is_zero()]
    print(f"  order-2 stencil degenerates to {live}, i.e. the tangential"
          " wave operator composed with restriction")

    print("\nambient operators:")
    box2 = build_ambient_operator("power_laplacian", sig, m=2)
    out = apply_and_restrict(box2, MultiPolynomial.monomial([(x(1), 4)]))
    print(f"  Box^2 applied to x_1^4 gives {out.text()}")


if __name__ == "__main__":
    main()
