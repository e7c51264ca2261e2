"""Gegenbauer polynomial families with exact symbolic parameter.

Four variants are provided, all with coefficients in Q[alpha]:

* ``C``            the classical family C_l^alpha(x),
* ``Ctilde``       the renormalization C_l^alpha / (alpha)_[(l+1)/2],
  which is nonzero for every value of alpha,
* ``Cscript``      the inflated polynomial with Cscript_l(x^2) =
  x^l C_l(1/x), a polynomial of degree [l/2] in t,
* ``CscriptTilde`` the renormalized inflated family.

Renormalized families are built from a closed coefficient product, not
by dividing polynomials, so staying inside Q[alpha] is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from .polynomial import ALPHA, GX, T, ONE, ZERO, MultiPolynomial, poly

AlphaLike = Union[int, Fraction, MultiPolynomial, None]

_ALPHA = poly(ALPHA)
_X = poly(GX)
_T = poly(T)


def _alpha_poly(alpha: AlphaLike) -> MultiPolynomial:
    if alpha is None:
        return _ALPHA
    if isinstance(alpha, MultiPolynomial):
        return alpha
    return MultiPolynomial.constant(alpha)


def rising_factorial(base: MultiPolynomial, k: int) -> MultiPolynomial:
    """(base)_k = base (base+1) ... (base+k-1), exactly."""
    out = ONE
    for m in range(k):
        out = out * (base + m)
    return out


def rising_factorial_quotient(shift_from: int, shift_to: int) -> MultiPolynomial:
    """(alpha)_{shift_to} / (alpha)_{shift_from} as a polynomial.

    Requires shift_to >= shift_from; equals prod_{m=shift_from}^{shift_to-1}
    (alpha + m).
    """
    if shift_to < shift_from:
        raise ValueError("quotient is not polynomial")
    out = ONE
    for m in range(shift_from, shift_to):
        out = out * (_ALPHA + m)
    return out


@dataclass(frozen=True)
class GegenbauerPoly:
    l: int
    variant: str
    body: MultiPolynomial

    def text(self) -> str:
        return self.body.text()


def _renorm_shift(l: int) -> int:
    return (l + 1) // 2


def gegenbauer_C(l: int) -> GegenbauerPoly:
    """C_l^alpha(x) from the finite hypergeometric sum.

    Coefficient of x^(l-2k) is (-1)^k (alpha)_{l-k} 2^(l-2k) / (k! (l-2k)!).
    C_0 = 1 and C_1 = 2 alpha x; the three-term recurrence is a verified
    consequence, not the construction.
    """
    if l < 0:
        raise ValueError("degree must be >= 0")
    body = ZERO
    for k in range(l // 2 + 1):
        c = Fraction((-1) ** k * 2 ** (l - 2 * k), factorial(k) * factorial(l - 2 * k))
        coeff = rising_factorial(_ALPHA, l - k) * c
        body = body + coeff * MultiPolynomial.monomial([(GX, l - 2 * k)])
    return GegenbauerPoly(l, "C", body)


def gegenbauer_Ctilde(l: int) -> GegenbauerPoly:
    """Renormalized family, coefficients still polynomial in alpha.

    Coefficient of x^(l-2k) is
    (-1)^k 2^(l-2k) / (k! (l-2k)!) * prod_{m=[(l+1)/2]}^{l-k-1} (alpha+m).
    """
    if l < 0:
        raise ValueError("degree must be >= 0")
    shift = _renorm_shift(l)
    body = ZERO
    for k in range(l // 2 + 1):
        c = Fraction((-1) ** k * 2 ** (l - 2 * k), factorial(k) * factorial(l - 2 * k))
        coeff = rising_factorial_quotient(shift, l - k) * c
        body = body + coeff * MultiPolynomial.monomial([(GX, l - 2 * k)])
    return GegenbauerPoly(l, "Ctilde", body)


def inflated_Cscript(l: int, renormalized: bool = False) -> GegenbauerPoly:
    """The t-polynomial with Cscript_l(x^2) = x^l C_l(1/x).

    Degree [l/2] in t; coefficient of t^k is
    (-1)^k (alpha)_{l-k} 2^(l-2k) / (k! (l-2k)!).  The renormalized
    variant divides by (alpha)_[(l+1)/2] via the same closed product.
    l = -1 returns the zero polynomial by convention.
    """
    if l < -1:
        raise ValueError("degree must be >= -1")
    variant = "CscriptTilde" if renormalized else "Cscript"
    if l == -1:
        return GegenbauerPoly(-1, variant, ZERO)
    shift = _renorm_shift(l)
    body = ZERO
    for k in range(l // 2 + 1):
        c = Fraction((-1) ** k * 2 ** (l - 2 * k), factorial(k) * factorial(l - 2 * k))
        if renormalized:
            coeff = rising_factorial_quotient(shift, l - k) * c
        else:
            coeff = rising_factorial(_ALPHA, l - k) * c
        body = body + coeff * MultiPolynomial.monomial([(T, k)])
    return GegenbauerPoly(l, variant, body)


def gegenbauer(l: int, variant: str = "C") -> GegenbauerPoly:
    if variant == "C":
        return gegenbauer_C(l)
    if variant == "Ctilde":
        return gegenbauer_Ctilde(l)
    if variant == "Cscript":
        return inflated_Cscript(l, renormalized=False)
    if variant == "CscriptTilde":
        return inflated_Cscript(l, renormalized=True)
    raise ValueError(f"unknown variant {variant!r}")


def instantiate_alpha(p: GegenbauerPoly, alpha: AlphaLike) -> MultiPolynomial:
    return p.body.substitute(ALPHA, _alpha_poly(alpha))


# -- differential equations -------------------------------------------


def ode_residual_R(l: int, h: MultiPolynomial, alpha: AlphaLike = None) -> MultiPolynomial:
    """Residual of the reduced radial equation.

    R(l, alpha) = 4t(1+t) d^2/dt^2 + ((6-4l)t + 4(1-alpha-l)) d/dt + l(l-1),
    applied exactly to a univariate polynomial in t.  Zero iff h solves
    the radial equation.
    """
    a = _alpha_poly(alpha)
    h1 = h.diff(T)
    h2 = h1.diff(T)
    term2 = (4 * _T * (ONE + _T)) * h2
    term1 = ((6 - 4 * l) * _T + (ONE - a - l) * 4) * h1
    term0 = (l * (l - 1)) * h
    return term2 + term1 + term0


def gegenbauer_ode_residual(l: int, g: MultiPolynomial, alpha: AlphaLike = None) -> MultiPolynomial:
    """Residual of (1-x^2) g'' - (2 alpha + 1) x g' + l(l+2 alpha) g."""
    a = _alpha_poly(alpha)
    g1 = g.diff(GX)
    g2 = g1.diff(GX)
    return (ONE - _X * _X) * g2 - (2 * a + 1) * _X * g1 + (l * ONE + 2 * a) * l * g


def inflate_roundtrip_residual(l: int) -> MultiPolynomial:
    """x^l C_l(1/x) - Cscript_l(x^2), cleared of denominators.

    Computed as sum_k coeff_k x^(l - (l-2k)) ... i.e. by matching powers
    directly, so the result is a genuine polynomial identity check.
    """
    c = gegenbauer_C(l).body
    scr = inflated_Cscript(l).body
    # x^l C_l(1/x): monomial x^e -> x^(l-e).
    lhs = ZERO
    for m, coeff in c.terms():
        e = 0
        rest = []
        for code, ee in m:
            if code == GX:
                e = ee
            else:
                rest.append((code, ee))
        lhs = lhs + MultiPolynomial.monomial(rest + [(GX, l - e)], coeff)
    rhs = scr.substitute(T, _X * _X)
    return lhs - rhs


# -- negative-parameter duality ---------------------------------------


def dual_limit_C(a: int, k: int) -> MultiPolynomial:
    """C_a^{-k}(x) from the limit coefficient formula.

    (-1)^a k! sum_i (2x)^(a-2i) / ((k-a+i)! i! (a-2i)!), terms with
    k - a + i < 0 dropped (reciprocal Gamma vanishing at nonpositive
    integers).  Independent route used to check the duality
    C_a^{-k} = C_{2k-a}^{-k}.
    """
    out = ZERO
    for i in range(a // 2 + 1):
        j = k - a + i
        if j < 0:
            continue
        c = Fraction((-1) ** a * factorial(k) * 2 ** (a - 2 * i),
                     factorial(j) * factorial(i) * factorial(a - 2 * i))
        out = out + MultiPolynomial.monomial([(GX, a - 2 * i)], c)
    return out


# -- identity suite ----------------------------------------------------

IDENTITY_NAMES = (
    "derivative",
    "three_term",
    "contiguous",
    "renorm_deriv_even",
    "renorm_deriv_odd",
    "renorm_three_even",
    "renorm_three_odd",
    "dual_negative_k",
)


@dataclass
class IdentityReport:
    name: str
    l_max: int
    checked: int
    ok: bool
    first_failure: str | None = None


def _shift_alpha(p: MultiPolynomial, delta: int) -> MultiPolynomial:
    return p.substitute(ALPHA, _ALPHA + delta)


def verify_identity(name: str, l_max: int) -> IdentityReport:
    """Check one named identity exactly in Q[alpha][x] for all l <= l_max.

    dual_negative_k interprets l_max as the bound on 2k and checks both
    dual statements for all a <= 2k, k <= l_max // 2, against the limit
    coefficient formula as well.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}")
    checked = 0

    def fail(msg: str) -> IdentityReport:
        return IdentityReport(name, l_max, checked, False, msg)

    C = [gegenbauer_C(l).body for l in range(l_max + 1)]
    Ct = [gegenbauer_Ctilde(l).body for l in range(l_max + 1)]

    if name == "derivative":
        for l in range(1, l_max + 1):
            lhs = C[l].diff(GX)
            rhs = 2 * _ALPHA * _shift_alpha(C[l - 1], 1)
            checked += 1
            if lhs != rhs:
                return fail(f"d/dx C_{l} != 2 alpha C_{l-1}^(alpha+1)")
    elif name == "three_term":
        for l in range(2, l_max + 1):
            lhs = l * C[l]
            rhs = 2 * _X * (_ALPHA + (l - 1)) * C[l - 1] - (ONE * l + 2 * _ALPHA - 2) * C[l - 2]
            checked += 1
            if lhs != rhs:
                return fail(f"three-term recurrence fails at l={l}")
    elif name == "contiguous":
        for l in range(2, l_max + 1):
            r1 = l * C[l] - 2 * _ALPHA * _X * _shift_alpha(C[l - 1], 1) \
                + 2 * _ALPHA * _shift_alpha(C[l - 2], 1)
            checked += 1
            if not r1.is_zero():
                return fail(f"l C_l - 2 alpha x C_(l-1)^(a+1) + 2 alpha C_(l-2)^(a+1) != 0 at l={l}")
        for l in range(1, l_max + 1):
            r2 = -2 * _ALPHA * _shift_alpha(C[l], 1) + (ONE * l + 2 * _ALPHA) * C[l] \
                + 2 * _ALPHA * _X * _shift_alpha(C[l - 1], 1)
            checked += 1
            if not r2.is_zero():
                return fail(f"contiguous relation fails at l={l}")
    elif name == "renorm_deriv_even":
        for N in range(1, l_max // 2 + 1):
            lhs = Ct[2 * N].diff(GX)
            rhs = 2 * (_ALPHA + N) * _shift_alpha(Ct[2 * N - 1], 1)
            checked += 1
            if lhs != rhs:
                return fail(f"d/dx Ctilde_(2N) fails at N={N}")
    elif name == "renorm_deriv_odd":
        for N in range(0, (l_max - 1) // 2 + 1):
            lhs = Ct[2 * N + 1].diff(GX)
            rhs = 2 * _shift_alpha(Ct[2 * N], 1)
            checked += 1
            if lhs != rhs:
                return fail(f"d/dx Ctilde_(2N+1) fails at N={N}")
    elif name == "renorm_three_even":
        for N in range(1, l_max // 2 + 1):
            r = N * Ct[2 * N] - (_ALPHA + N) * _X * _shift_alpha(Ct[2 * N - 1], 1) \
                + _shift_alpha(Ct[2 * N - 2], 1)
            checked += 1
            if not r.is_zero():
                return fail(f"renormalized even relation fails at N={N}")
    elif name == "renorm_three_odd":
        for N in range(1, (l_max - 1) // 2 + 1):
            r = (2 * N + 1) * Ct[2 * N + 1] - 2 * _X * _shift_alpha(Ct[2 * N], 1) \
                + 2 * _shift_alpha(Ct[2 * N - 1], 1)
            checked += 1
            if not r.is_zero():
                return fail(f"renormalized odd relation fails at N={N}")
    elif name == "dual_negative_k":
        for k in range(1, l_max // 2 + 1):
            for a in range(0, 2 * k + 1):
                Ca = C[a].substitute(ALPHA, Fraction(-k))
                Cdual = C[2 * k - a].substitute(ALPHA, Fraction(-k)) if 2 * k - a <= l_max \
                    else gegenbauer_C(2 * k - a).body.substitute(ALPHA, Fraction(-k))
                checked += 1
                if Ca != Cdual:
                    return fail(f"C_{a}^(-{k}) != C_{2*k-a}^(-{k})")
                limit = dual_limit_C(a, k)
                checked += 1
                if Ca != limit:
                    return fail(f"C_{a}^(-{k}) disagrees with the limit formula")
                # Inflated statement: Cscript_a(s) = s^(a-k) Cscript_(2k-a)(s),
                # i.e. the higher-degree side carries the extra power of s.
                sa = inflated_Cscript(a).body.substitute(ALPHA, Fraction(-k))
                sd = inflated_Cscript(2 * k - a).body.substitute(ALPHA, Fraction(-k))
                checked += 1
                if a >= k:
                    ok_pair = sa == MultiPolynomial.monomial([(T, a - k)]) * sd
                else:
                    ok_pair = sd == MultiPolynomial.monomial([(T, k - a)]) * sa
                if not ok_pair:
                    return fail(f"Cscript duality fails at k={k}, a={a}")
    return IdentityReport(name, l_max, checked, True)


def verify_all_identities(l_max: int) -> list[IdentityReport]:
    return [verify_identity(name, l_max) for name in IDENTITY_NAMES]


def generating_function_coefficients(m: int, count: int) -> list[MultiPolynomial]:
    """First ``count`` t-coefficients of (1 - 2xt + t^2)^(-m), m integer >= 1.

    Exact truncated series inversion: with u = (1 - 2xt + t^2)^m the
    coefficients v_k of 1/u satisfy v_0 = 1 and
    v_k = -sum_{i=1}^{k} u_i v_{k-i}.  This is the independent
    generating-function route at integer parameters.
    """
    if m < 1:
        raise ValueError("integer parameter must be >= 1")
    base = {0: ONE, 1: -2 * _X, 2: ONE}
    u: dict[int, MultiPolynomial] = {0: ONE}
    for _ in range(m):
        new: dict[int, MultiPolynomial] = {}
        for d1, c1 in u.items():
            for d2, c2 in base.items():
                if d1 + d2 < count:
                    new[d1 + d2] = new.get(d1 + d2, ZERO) + c1 * c2
        u = new
    v = [ONE]
    for k in range(1, count):
        acc = ZERO
        for i in range(1, k + 1):
            ui = u.get(i, ZERO)
            if not ui.is_zero():
                acc = acc + ui * v[k - i]
        v.append(-acc)
    return v
