"""Gegenbauer families: frozen low-degree values and exact identities.

The explicit polynomials asserted here were computed independently from
the closed hypergeometric sum and the three-term recurrence before the
library existed; they double as regression anchors.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from vermaops.gegenbauer import (
    IDENTITY_NAMES,
    dual_limit_C,
    gegenbauer_C,
    gegenbauer_Ctilde,
    gegenbauer_ode_residual,
    generating_function_coefficients,
    inflate_roundtrip_residual,
    inflated_Cscript,
    ode_residual_R,
    verify_identity,
)
from vermaops.polynomial import ALPHA, GX, T, MultiPolynomial, poly

A = poly(ALPHA)
X = poly(GX)
TT = poly(T)


def test_low_degree_values():
    assert gegenbauer_C(0).body == MultiPolynomial.constant(1)
    assert gegenbauer_C(1).body == 2 * A * X
    assert gegenbauer_C(2).body == 2 * A * (A + 1) * X ** 2 - A


def test_recurrence_consistency():
    # l C_l = 2x (l + alpha - 1) C_(l-1) - (l + 2 alpha - 2) C_(l-2)
    C = [gegenbauer_C(l).body for l in range(13)]
    for l in range(2, 13):
        lhs = l * C[l]
        rhs = 2 * X * (A + (l - 1)) * C[l - 1] - (l + 2 * A - 2) * C[l - 2]
        assert lhs == rhs, l


def test_renormalized_values():
    assert gegenbauer_Ctilde(0).body == MultiPolynomial.constant(1)
    assert gegenbauer_Ctilde(2).body == 2 * (A + 1) * X ** 2 - 1
    # inflated renormalized family, frozen appendix-style table
    assert inflated_Cscript(0, True).body == MultiPolynomial.constant(1)
    assert inflated_Cscript(1, True).body == MultiPolynomial.constant(2)
    assert inflated_Cscript(2, True).body == 2 * (A + 1) - TT
    assert inflated_Cscript(3, True).body == 2 * (Fraction(2, 3) * (A + 2) - TT)
    assert inflated_Cscript(4, True).body == Fraction(1, 2) * (
        Fraction(4, 3) * (A + 2) * (A + 3) - 4 * (A + 2) * TT + TT ** 2)
    assert inflated_Cscript(-1, True).body.is_zero()


def test_ctilde_divides_c():
    # Ctilde_l * (alpha)_[(l+1)/2] = C_l, so the closed product really is
    # the renormalization
    from vermaops.gegenbauer import rising_factorial
    for l in range(0, 11):
        shift = (l + 1) // 2
        assert gegenbauer_Ctilde(l).body * rising_factorial(A, shift) \
            == gegenbauer_C(l).body


def test_gegenbauer_ode():
    assert gegenbauer_ode_residual(1, gegenbauer_C(1).body).is_zero()
    for l in range(0, 11):
        assert gegenbauer_ode_residual(l, gegenbauer_C(l).body).is_zero()
        assert gegenbauer_ode_residual(l, gegenbauer_Ctilde(l).body).is_zero()
    # x^l is not a solution for l >= 2
    assert not gegenbauer_ode_residual(3, X ** 3).is_zero()


def test_radial_operator_examples():
    assert ode_residual_R(0, MultiPolynomial.constant(1)).is_zero()
    h = inflated_Cscript(2, True).body.substitute(T, -TT)  # Ctilde_2(-t)
    assert ode_residual_R(2, h).is_zero()
    r = ode_residual_R(2, TT ** 2)
    assert not r.is_zero()


def test_radial_vs_gegenbauer_equation():
    # h(t) solves R(l, alpha) iff g(x) = x^l h(-1/x^2) solves the
    # classical equation; checked through the inflated family
    for l in range(0, 9):
        h = inflated_Cscript(l, True).body.substitute(T, -TT)
        assert ode_residual_R(l, h).is_zero(), l


def test_inflation_round_trip():
    for l in range(0, 11):
        assert inflate_roundtrip_residual(l).is_zero(), l


@pytest.mark.parametrize("name", IDENTITY_NAMES)
def test_identity_suite(name):
    bound = 8 if name == "dual_negative_k" else 10
    rep = verify_identity(name, bound)
    assert rep.ok, rep.first_failure


def test_identity_examples():
    # d/dx C_5 = 2 alpha C_4^(alpha+1)
    c5 = gegenbauer_C(5).body.diff(GX)
    c4_up = gegenbauer_C(4).body.substitute(ALPHA, A + 1)
    assert c5 == 2 * A * c4_up
    # negative-parameter duality, smallest case
    c0 = gegenbauer_C(0).body.substitute(ALPHA, Fraction(-1))
    c2 = gegenbauer_C(2).body.substitute(ALPHA, Fraction(-1))
    assert c0 == c2 == MultiPolynomial.constant(1)
    assert dual_limit_C(2, 1) == MultiPolynomial.constant(1)
    # renormalized even contiguous relation at N = 1
    ct2 = gegenbauer_Ctilde(2).body
    ct1_up = gegenbauer_Ctilde(1).body.substitute(ALPHA, A + 1)
    ct0_up = gegenbauer_Ctilde(0).body.substitute(ALPHA, A + 1)
    assert (ct2 - (A + 1) * X * ct1_up + ct0_up).is_zero()


def test_generating_function_integer_alpha():
    for m in (1, 2, 3):
        coeffs = generating_function_coefficients(m, 8)
        for l in range(8):
            assert coeffs[l] == gegenbauer_C(l).body.substitute(ALPHA, Fraction(m))


def test_nonzero_at_every_alpha():
    # the lowest x-coefficient of Ctilde is a nonzero rational constant
    for l in range(0, 11):
        body = gegenbauer_Ctilde(l).body
        mono = ((GX, l % 2),) if l % 2 else ()
        bottom = body.coefficient(mono)
        assert bottom != 0
        for a_num in (-3, -2, -1, 0, 1, 5):
            inst = body.substitute(ALPHA, Fraction(a_num))
            assert not inst.is_zero()


def test_errors():
    with pytest.raises(ValueError):
        gegenbauer_C(-1)
    with pytest.raises(ValueError):
        inflated_Cscript(-2)
    with pytest.raises(ValueError):
        verify_identity("nonsense", 5)
    with pytest.raises(ValueError):
        verify_identity("derivative", 0)
