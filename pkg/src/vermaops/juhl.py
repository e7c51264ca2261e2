"""Equivariant differential operator stencils and intertwining checks.

A stencil is a formal sum of terms

    coeff * (Box')^(boxprime_power) * (d/dx_n)^(dn_power) [* Clifford factor]

applied to functions on the ambient space and, for the boundary kinds,
restricted to x_n = 0 afterwards.  Per-kind conventions:

* ``scalar_even`` / ``scalar_odd``: coeff multiplies (-Box')^j; the
  coefficients are the Gegenbauer products a_j(-lam), b_j(-lam) with
  top coefficient 1.
* ``spinor_even`` / ``spinor_odd``: coeff multiplies (+Box')^j and the
  Clifford factors carry the metric signs,

      Dprime        : F -> sum_{k<n} eps_k e_k dF/dx_k
      dn_underline  : F -> eps_n e_n dF/dx_n
      Dprime_then_dn_underline : the composition (dn first, Dprime on
      the left), matching the product of the two Fourier-side symbols.

  These stencils are the exact derivative transcription of the
  degree-K spinor solution at the *same* density parameter: the
  machine-checked intertwining relation (``verify_intertwining``)
  pins down this convention; see the scalar/spinor asymmetry note in
  the README.  With p = 1 all signs collapse and the factors reduce to
  the plain tangential Dirac operator and e_n d/dx_n up to a unit.
* ``ambient_power_laplacian``: coeff multiplies (+Box')^j, no
  restriction (operator from the full space to itself).
* ``harmonic_contraction``: the constant-coefficient operator h(d/dx)
  for a harmonic symbol h, stored whole in ``symbol`` (mixed
  derivatives do not fit the Box'/d_n term shape); no restriction.

Scaling and rotation generator actions are standard conformal vector
fields derived for coverage; the machine-checked theorem content lives
in the nplus/nminus generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Union

from .clifford import (
    CliffordPolynomial,
    all_blades,
    clifford_mul,
    left_mul_blade,
    reversal,
)
from .polynomial import (
    LAMBDA,
    MultiPolynomial,
    Signature,
    monomial_basis,
    poly,
    x,
    xi,
)
from .scalar import (
    DensityParam,
    SYMBOLIC,
    apply_Q,
    box,
    closed_form_w,
    density,
)
from .spinor import apply_spinor_Q, spinor_singular_F

CLIFFORD_WEIGHT = {None: 0, "Dprime": 1, "dn_underline": 1, "Dprime_then_dn_underline": 2}


def coeff_a(j: int, N: int, n: int, lam: DensityParam) -> MultiPolynomial:
    """Juhl coefficient a_j(lam), top coefficient a_N = 1.

    a_j = (-2)^(N-j) N! / (j! (2N-2j)!) prod_{k=j}^{N-1} (2 lam - 4N + 2k + n + 1).
    """
    if j > N:
        raise ValueError("requires j <= N")
    lam_p = density(lam)
    c = Fraction((-2) ** (N - j) * factorial(N), factorial(j) * factorial(2 * N - 2 * j))
    out = MultiPolynomial.constant(c)
    for k in range(j, N):
        out = out * (2 * lam_p + (-4 * N + 2 * k + n + 1))
    return out


def coeff_b(j: int, N: int, n: int, lam: DensityParam) -> MultiPolynomial:
    """Juhl coefficient b_j(lam), top coefficient b_N = 1.

    b_j = (-2)^(N-j) N! / (j! (2N-2j+1)!) prod_{k=j}^{N-1} (2 lam - 4N + 2k + n - 1).
    """
    if j > N:
        raise ValueError("requires j <= N")
    lam_p = density(lam)
    c = Fraction((-2) ** (N - j) * factorial(N), factorial(j) * factorial(2 * N - 2 * j + 1))
    out = MultiPolynomial.constant(c)
    for k in range(j, N):
        out = out * (2 * lam_p + (-4 * N + 2 * k + n - 1))
    return out


@dataclass
class StencilTerm:
    coeff: MultiPolynomial
    boxprime_power: int
    dn_power: int
    clifford_factor: Optional[str] = None


@dataclass
class OperatorStencil:
    K: int
    kind: str
    terms: list[StencilTerm]
    sig: Signature
    symbol: Optional[MultiPolynomial] = None  # harmonic_contraction only

    def order_invariant_holds(self) -> bool:
        """2*boxprime + dn (+ Clifford weight) = K for every term."""
        if self.kind == "harmonic_contraction":
            return self.symbol is not None and self.symbol.degree() == self.K
        return all(
            2 * t.boxprime_power + t.dn_power + CLIFFORD_WEIGHT[t.clifford_factor] == self.K
            for t in self.terms)

    def boxprime_sign(self) -> int:
        return -1 if self.kind in ("scalar_even", "scalar_odd") else 1

    def restricts(self) -> bool:
        return self.kind in ("scalar_even", "scalar_odd", "spinor_even", "spinor_odd")

    def to_json_dict(self) -> dict:
        d = {
            "K": self.K,
            "kind": self.kind,
            "p": self.sig.p,
            "q": self.sig.q,
            "boxprime_sign": self.boxprime_sign(),
            "terms": [
                {
                    "j": t.boxprime_power,
                    "boxprime_power": t.boxprime_power,
                    "dn_power": t.dn_power,
                    "clifford_factor": t.clifford_factor,
                    "coefficient": t.coeff.text(),
                }
                for t in self.terms
            ],
        }
        if self.symbol is not None:
            d["symbol"] = self.symbol.text()
        return d

    def to_csv(self) -> str:
        lines = ["j,boxprime_power,dn_power,clifford_factor,coefficient"]
        for t in self.terms:
            cf = t.clifford_factor or ""
            lines.append(
                f"{t.boxprime_power},{t.boxprime_power},{t.dn_power},{cf},{t.coeff.text()}")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        sign = "-" if self.boxprime_sign() < 0 else ""
        parts = []
        for t in self.terms:
            factors = [f"\\left({t.coeff.text()}\\right)"]
            if t.boxprime_power:
                factors.append(f"({sign}\\Box')^{{{t.boxprime_power}}}")
            if t.dn_power:
                factors.append(f"\\partial_n^{{{t.dn_power}}}")
            if t.clifford_factor == "Dprime":
                factors.append("\\check{D}'")
            elif t.clifford_factor == "dn_underline":
                factors.append("\\underline{\\partial}_n")
            elif t.clifford_factor == "Dprime_then_dn_underline":
                factors.append("\\check{D}'\\underline{\\partial}_n")
            parts.append(" ".join(factors))
        return " + ".join(parts) if parts else "0"


def laplacian_x(f: MultiPolynomial, sig: Signature, upto: int | None = None) -> MultiPolynomial:
    """Base-side signature Laplacian sum_k eps_k d^2/dx_k^2."""
    m = sig.n if upto is None else upto
    out = MultiPolynomial()
    for k in range(1, m + 1):
        out = out + sig.eps(k) * f.diff(x(k)).diff(x(k))
    return out


def build_operator(K: int, lam: DensityParam, sig: Signature,
                   spinor: bool = False) -> OperatorStencil:
    """Boundary operator stencil of order K at density parameter lam.

    Scalar stencils carry the dualized coefficients a_j(-lam), b_j(-lam)
    on (-Box')^j d_n^(...).  Spinor stencils are transcribed from the
    degree-K spinor solution at the same lam (see module docstring) and
    scaled so the (Box')-richest coefficient equals 1.
    """
    if K < 0:
        raise ValueError("order must be >= 0")
    n = sig.n
    lam_p = density(lam)
    if not spinor:
        N = K // 2
        terms = []
        if K % 2 == 0:
            for j in range(N + 1):
                terms.append(StencilTerm(coeff_a(j, N, n, -lam_p), j, 2 * N - 2 * j))
            kind = "scalar_even"
        else:
            for j in range(N + 1):
                terms.append(StencilTerm(coeff_b(j, N, n, -lam_p), j, 2 * N - 2 * j + 1))
            kind = "scalar_odd"
        return OperatorStencil(K, kind, terms, sig)

    # Dualization: transcribe rev(F_K(-lam)) with xi_a -> d/dx_a; the
    # reversal is the value-space transpose between the two sides of the
    # pairing and the lam swap matches the scalar case.
    F = reversal(spinor_singular_F(K, -lam_p, sig))
    N = K // 2
    scale = Fraction((-1) ** N * factorial(N))
    terms = []
    for blade, p in F.components():
        if len(blade) == 0:
            factor = None
        elif blade == (n,):
            factor = "dn_underline"
        elif len(blade) == 1:
            factor = "Dprime"
        else:
            factor = "Dprime_then_dn_underline"
        if factor in ("Dprime", "Dprime_then_dn_underline"):
            # all tangential blades carry the same radial profile; read it
            # off the e_1 (or e_1 e_n) component and divide by eps_1 xi_1
            if blade[0] != 1:
                continue
        terms.extend(_radial_terms(p, blade, factor, sig, scale))
    kind = "spinor_even" if K % 2 == 0 else "spinor_odd"
    st = OperatorStencil(K, kind, terms, sig)
    assert st.order_invariant_holds()
    return st


def _radial_terms(p: MultiPolynomial, blade, factor, sig: Signature, scale: Fraction):
    """Decompose a component of the spinor solution into stencil terms.

    The identity-blade component is sum_k c_k |xi'|^(2k) xi_n^(m);
    components with a Clifford letter carry an extra xi factor that the
    symbol (Dprime / dn_underline) reabsorbs: e.g. the e_1 component of
    c(s) xi'_ is eps_1 xi_1 * (radial part).
    """
    n = sig.n
    # strip the letter variables: for e_1 components divide by eps_1 xi_1,
    # for e_n by eps_n xi_n, for e_1 e_n by eps_1 eps_n xi_1 xi_n (sign of
    # the blade product handled by the Fourier-side construction itself).
    strip: list[tuple[int, int]] = []
    unit = Fraction(1)
    if factor == "Dprime":
        strip = [(xi(1), 1)]
        unit = Fraction(sig.eps(1))
    elif factor == "dn_underline":
        strip = [(xi(n), 1)]
        unit = Fraction(sig.eps(n))
    elif factor == "Dprime_then_dn_underline":
        strip = [(xi(1), 1), (xi(n), 1)]
        unit = Fraction(sig.eps(1) * sig.eps(n))
    tangential = {xi(i) for i in range(1, n)}
    merged: dict = {}
    for m, c in p._terms.items():
        exps = dict(m)
        for code, e in strip:
            if exps.get(code, 0) < e:
                raise ValueError("component does not carry the expected letter")
            exps[code] -= e
            if not exps[code]:
                del exps[code]
        dn = exps.pop(xi(n), 0)
        tang = {code: e for code, e in exps.items() if code in tangential}
        param = tuple(sorted((code, e) for code, e in exps.items()
                             if code not in tangential))
        if not tang:
            k = 0
            coeff = c * scale / unit
        elif set(tang) == {xi(1)}:
            # the xi_1^(2k) monomial represents |xi'|^(2k); every other
            # tangential monomial is its multinomial shadow
            e1 = tang[xi(1)]
            if e1 % 2:
                raise ValueError("unexpected odd tangential power")
            k = e1 // 2
            coeff = c * scale / unit / Fraction(sig.eps(1)) ** k
        else:
            continue
        key = (k, dn, factor)
        merged[key] = merged.get(key, MultiPolynomial()) \
            + MultiPolynomial({param: coeff})
    return [StencilTerm(cf, bp, dn, fac) for (bp, dn, fac), cf in sorted(
        merged.items(), key=lambda kv: (kv[0][0], kv[0][1], str(kv[0][2])))]


def _apply_clifford_factor(factor: str, F: CliffordPolynomial,
                           sig: Signature) -> CliffordPolynomial:
    n = sig.n
    if factor == "dn_underline":
        return left_mul_blade((n,), F.diff(x(n)), sig, sig.eps(n))
    if factor == "Dprime":
        out = CliffordPolynomial()
        for k in range(1, n):
            out = out + left_mul_blade((k,), F.diff(x(k)), sig, sig.eps(k))
        return out
    if factor == "Dprime_then_dn_underline":
        return _apply_clifford_factor("Dprime",
                                      _apply_clifford_factor("dn_underline", F, sig), sig)
    raise ValueError(f"unknown Clifford factor {factor!r}")


def apply_and_restrict(st: OperatorStencil, u: Union[MultiPolynomial, CliffordPolynomial]):
    """Apply a stencil to a polynomial section, then restrict to x_n = 0.

    Boundary kinds restrict; ambient kinds return the full-space result.
    Scalar input to a spinor stencil is promoted to the identity blade.
    """
    sig = st.sig
    n = sig.n
    if st.kind == "harmonic_contraction":
        return _apply_symbol(st.symbol, u, sig)
    spinor_stencil = st.kind in ("spinor_even", "spinor_odd")
    if spinor_stencil and isinstance(u, MultiPolynomial):
        u = CliffordPolynomial.scalar(u)
    sign = st.boxprime_sign()
    if isinstance(u, CliffordPolynomial):
        total = CliffordPolynomial()
    else:
        total = MultiPolynomial()
    for t in st.terms:
        g = u
        for _ in range(t.dn_power):
            g = g.diff(x(n))
        for _ in range(t.boxprime_power):
            if isinstance(g, CliffordPolynomial):
                g = CliffordPolynomial({b: sign * laplacian_x(p, sig, upto=n - 1)
                                        for b, p in g._comp.items()})
            else:
                g = sign * laplacian_x(g, sig, upto=n - 1)
        if t.clifford_factor is not None:
            if not isinstance(g, CliffordPolynomial):
                g = CliffordPolynomial.scalar(g)
            g = _apply_clifford_factor(t.clifford_factor, g, sig)
        total = total + g * t.coeff
    if st.restricts():
        total = total.substitute(x(n), 0)
    return total


def _apply_symbol(h: MultiPolynomial, u, sig: Signature):
    """The constant-coefficient operator h(d/dx) for a xi-symbol h."""
    if isinstance(u, CliffordPolynomial):
        return CliffordPolynomial({b: _apply_symbol(h, p, sig) for b, p in u._comp.items()})
    total = MultiPolynomial()
    for m, c in h._terms.items():
        g = u
        for code, e in m:
            name_index = code - 10 if code >= 10 else 0
            for _ in range(e):
                g = g.diff(x(name_index))
        total = total + c * g
    return total


def build_ambient_operator(kind, sig: Signature, m: int | None = None,
                           h: MultiPolynomial | None = None) -> OperatorStencil:
    """Ambient operators: Laplacian powers and harmonic contractions.

    ``kind`` is "power_laplacian" (requires m >= 1) or
    "harmonic_contraction" (requires a harmonic xi-symbol h).
    """
    if kind == "power_laplacian":
        if m is None or m < 1:
            raise ValueError("power_laplacian requires m >= 1")
        terms = []
        for i in range(m + 1):
            c = Fraction(comb(m, i) * (-1) ** i)
            terms.append(StencilTerm(MultiPolynomial.constant(c), m - i, 2 * i))
        return OperatorStencil(2 * m, "ambient_power_laplacian", terms, sig)
    if kind == "harmonic_contraction":
        if h is None:
            raise ValueError("harmonic_contraction requires the symbol h")
        if not box(h, sig).is_zero():
            raise ValueError("symbol is not harmonic")
        return OperatorStencil(h.degree(), "harmonic_contraction", [], sig, symbol=h)
    raise ValueError(f"unknown ambient kind {kind!r}")


# -- generator actions and intertwining ----------------------------------


def _scalar_action(generator: tuple, lam, f: MultiPolynomial, sig: Signature,
                   upto: int, shift: int) -> MultiPolynomial:
    name = generator[0]
    if name == "nplus":
        return apply_Q(generator[1], lam, f, sig, upto=upto, weight_shift=shift)
    if name == "nminus":
        return f.diff(x(generator[1]))
    if name == "scaling":
        out = (density(lam) + shift) * f
        for k in range(1, upto + 1):
            out = out + poly(x(k)) * f.diff(x(k))
        return out
    if name == "rotation":
        i, j = generator[1], generator[2]
        return sig.eps(j) * poly(x(j)) * f.diff(x(i)) \
            - sig.eps(i) * poly(x(i)) * f.diff(x(j))
    raise ValueError(f"unknown generator {generator!r}")


def _spinor_action(generator: tuple, lam, F: CliffordPolynomial, sig: Signature,
                   upto: int, shift: int) -> CliffordPolynomial:
    name = generator[0]
    if name == "nplus":
        return apply_spinor_Q(generator[1], lam, F, sig, upto=upto, weight_shift=shift)
    if name == "nminus":
        return F.diff(x(generator[1]))
    if name == "scaling":
        lam_p = density(lam) + shift
        out = CliffordPolynomial({b: lam_p * p for b, p in F._comp.items()})
        for k in range(1, upto + 1):
            out = out + F.diff(x(k)) * poly(x(k))
        return out
    if name == "rotation":
        # orbital rotation field plus the spin bivector 1/2 e_i e_j
        i, j = generator[1], generator[2]
        orbital = F.diff(x(i)) * (sig.eps(j) * poly(x(j))) \
            - F.diff(x(j)) * (sig.eps(i) * poly(x(i)))
        spin = left_mul_blade((min(i, j), max(i, j)), F, sig,
                              Fraction(1, 2) * (1 if i < j else -1))
        return orbital + spin
    raise ValueError(f"unknown generator {generator!r}")


@dataclass
class IntertwiningReport:
    K: int
    lam: Fraction
    generator: tuple
    spinor: bool
    cases: int = 0
    ok: bool = True
    first_discrepancy: Optional[str] = None


def verify_intertwining(K: int, lam, generator: tuple, d_max: int, sig: Signature,
                        spinor: bool = False) -> IntertwiningReport:
    """Exact check of stencil-equivariance for one generator.

    Compares stencil(action_lam(u)) with action'_(lam+K)(stencil(u))
    on every monomial of degree <= d_max (times every blade in the
    spinor case).  The primed action lives on the first n-1 coordinates
    at parameter lam + K.
    """
    lam = Fraction(lam) if not isinstance(lam, str) else lam
    st = build_operator(K, lam, sig, spinor=spinor)
    n = sig.n
    gen_index = generator[1] if len(generator) > 1 else None
    if gen_index is not None and not 1 <= gen_index <= n - 1:
        raise ValueError("generator index must be < n")
    if generator[0] == "rotation" and not 1 <= generator[2] <= n - 1:
        raise ValueError("generator index must be < n")
    report = IntertwiningReport(K, lam, generator, spinor)
    monos = []
    for d in range(d_max + 1):
        monos.extend(monomial_basis([x(i) for i in range(1, n + 1)], d))
    blades = all_blades(n) if spinor else [None]
    for m in monos:
        for b in blades:
            if spinor:
                u = CliffordPolynomial({b: MultiPolynomial({m: Fraction(1)})})
                lhs = apply_and_restrict(st, _spinor_action(generator, lam, u, sig, n, 0))
                rhs = _spinor_action(generator, lam, apply_and_restrict(st, u),
                                     sig, n - 1, K)
            else:
                u = MultiPolynomial({m: Fraction(1)})
                lhs = apply_and_restrict(st, _scalar_action(generator, lam, u, sig, n, 0))
                rhs = _scalar_action(generator, lam, apply_and_restrict(st, u),
                                     sig, n - 1, K)
            report.cases += 1
            if lhs != rhs:
                report.ok = False
                diff = lhs - rhs
                report.first_discrepancy = (
                    f"monomial {MultiPolynomial({m: Fraction(1)}).text()}"
                    + (f" blade {b}" if spinor else "")
                    + f": {diff.text()}")
                return report
    return report
