"""Tour of the Gegenbauer families with exact symbolic parameter.

Run:  python demos/01_gegenbauer_families.py

Everything below is computed in Q[alpha][x]: no floats, no rounding.
The renormalized family stays nonzero at every parameter value, which
is the property that makes it usable as a universal solution family.
"""

from fractions import Fraction

from vermaops import (
    ALPHA,
    gegenbauer_C,
    gegenbauer_Ctilde,
    gegenbauer_ode_residual,
    inflated_Cscript,
    ode_residual_R,
    verify_identity,
)
from vermaops.polynomial import T, poly


def main():
    print("classical family:")
    for l in range(5):
        print(f"  C_{l} = {gegenbauer_C(l).text()}")

    print("\nrenormalized family (still polynomial in alpha):")
    for l in range(5):
        print(f"  Ctilde_{l} = {gegenbauer_Ctilde(l).text()}")

    print("\ninflated renormalized family in the radial variable t:")
    for l in range(5):
        print(f"  CscriptTilde_{l} = {inflated_Cscript(l, True).text()}")

    print("\nevery member solves its differential equation exactly:")
    for l in range(8):
        r1 = gegenbauer_ode_residual(l, gegenbauer_C(l).body)
        h = inflated_Cscript(l, True).body.substitute(T, -poly(T))
        r2 = ode_residual_R(l, h)
        print(f"  l={l}: classical residual {r1.text()},"
              f" radial residual {r2.text()}")

    print("\nnegative-parameter duality (the degeneration behind the"
          " factorization identities):")
    for k in (1, 2):
        for a in range(0, 2 * k + 1):
            lhs = gegenbauer_C(a).body.substitute(ALPHA, Fraction(-k))
            rhs = gegenbauer_C(2 * k - a).body.substitute(ALPHA, Fraction(-k))
            print(f"  C_{a}^(-{k}) == C_{2*k-a}^(-{k}): {lhs == rhs}")

    print("\nfull identity sweep at l <= 10:")
    for name in ("derivative", "three_term", "renorm_three_even", "dual_negative_k"):
        rep = verify_identity(name, 10 if name != "dual_negative_k" else 8)
        print(f"  {name}: ok={rep.ok} ({rep.checked} checks)")


if __name__ == "__main__":
    main()
