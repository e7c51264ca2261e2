"""Scalar densities: Fourier-side operators and singular vectors.

The two operator families are

    Q_j(lam) = -1/2 eps_j |X|^2 d/dx_j + x_j (lam + sum_k x_k d/dx_k)

on the base side and, on the Fourier side,

    P_j(lam) = 1/2 eps_j xi_j Box + (lam - E) d/dxi_j

with Box = sum_k eps_k d^2/dxi_k^2 and E the Euler operator.  A global
unit scalar has been dropped from P_j; kernels and intertwining
relations are insensitive to it and dropping it keeps all arithmetic
rational.

``closed_form_w`` produces the degree-K solution w_K of the system
P_j w = 0 (j < n) from the renormalized inflated Gegenbauer family,
``brute_force_sol`` recomputes the full solution space from nothing but
exact linear algebra, and the two routes are played against each other
in the test suite.

Radial convention: the internal radial variable is s = |xi'|^2 / xi_n^2,
which equals -t for the signed variable t = eps_n |xi'|^2 / xi_n^2 used
by the radial operator R(l, alpha), because eps_n = -1.  All
conversions happen at this module's boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .gegenbauer import inflated_Cscript, ode_residual_R
from .linalg import nullspace
from .polynomial import (
    ALPHA,
    LAMBDA,
    T,
    ONE,
    ZERO,
    Monomial,
    MultiPolynomial,
    Signature,
    coefficient_vector,
    monomial_basis,
    poly,
    xi,
    x,
)

SYMBOLIC = "symbolic"
DensityParam = Union[int, Fraction, str, MultiPolynomial]


def density(lam: DensityParam) -> MultiPolynomial:
    """Normalize a density parameter: rational value or the symbol L."""
    if isinstance(lam, MultiPolynomial):
        return lam
    if isinstance(lam, str):
        if lam == SYMBOLIC:
            return poly(LAMBDA)
        return MultiPolynomial.constant(Fraction(lam))
    return MultiPolynomial.constant(Fraction(lam))


def box(f: MultiPolynomial, sig: Signature, upto: int | None = None) -> MultiPolynomial:
    """Signature Laplacian sum_k eps_k d^2/dxi_k^2 (k <= upto, default n)."""
    m = sig.n if upto is None else upto
    out = ZERO
    for k in range(1, m + 1):
        out = out + sig.eps(k) * f.diff(xi(k)).diff(xi(k))
    return out


def euler(f: MultiPolynomial, sig: Signature) -> MultiPolynomial:
    out = ZERO
    for k in range(1, sig.n + 1):
        out = out + poly(xi(k)) * f.diff(xi(k))
    return out


def apply_P(j: int, lam: DensityParam, f: MultiPolynomial, sig: Signature) -> MultiPolynomial:
    """P_j(lam) f; lowers homogeneous degree by exactly one."""
    if not 1 <= j <= sig.n:
        raise IndexError(f"index {j} out of range 1..{sig.n}")
    lam_p = density(lam)
    half = Fraction(1, 2)
    dj = f.diff(xi(j))
    return (half * sig.eps(j)) * poly(xi(j)) * box(f, sig) + lam_p * dj - euler(dj, sig)


def apply_Q(j: int, lam: DensityParam, f: MultiPolynomial, sig: Signature,
            upto: int | None = None, weight_shift: int = 0) -> MultiPolynomial:
    """Q_j(lam) f on the base side; raises homogeneous degree by one.

    ``upto`` restricts every coordinate sum to the first ``upto``
    variables (the submanifold action) and ``weight_shift`` adds an
    integer to the density parameter; defaults give the ambient action.
    """
    if upto is None:
        upto = sig.n
    if not 1 <= j <= upto:
        raise IndexError(f"index {j} out of range 1..{upto}")
    lam_p = density(lam) + weight_shift
    half = Fraction(1, 2)
    euler_x = ZERO
    for k in range(1, upto + 1):
        euler_x = euler_x + poly(x(k)) * f.diff(x(k))
    return (-half * sig.eps(j)) * sig.x_norm2(upto=upto) * f.diff(x(j)) \
        + poly(x(j)) * (lam_p * f + euler_x)


def _cleared_radial(body_t: MultiPolynomial, K: int, sig: Signature,
                    lam_sub: MultiPolynomial | None = None) -> MultiPolynomial:
    """xi_n^K * h(s) with s = |xi'|^2 / xi_n^2, denominators cleared.

    ``body_t`` is a polynomial in t evaluated at t = -s, i.e. the caller
    passes h already expressed in t; each t^k becomes
    (eps_n |xi'|^2)^k xi_n^(K-2k) = (-|xi'|^2)^k xi_n^(K-2k).
    """
    norm2 = sig.xi_prime_norm2()
    out = ZERO
    for m, c in body_t.terms():
        k = 0
        rest = []
        for code, e in m:
            if code == T:
                k = e
            else:
                rest.append((code, e))
        if K - 2 * k < 0:
            raise ValueError("radial profile degree exceeds K/2")
        term = MultiPolynomial({tuple(rest): c}) * ((-1) ** k) * norm2 ** k \
            * MultiPolynomial.monomial([(xi(sig.n), K - 2 * k)] if K - 2 * k else [])
        out = out + term
    if lam_sub is not None:
        out = out.substitute(ALPHA, lam_sub)
    return out


def _alpha_of_lambda(lam: DensityParam, sig: Signature) -> MultiPolynomial:
    # alpha = -lam - (n-1)/2 for the scalar family.
    return -density(lam) - Fraction(sig.n - 1, 2)


def closed_form_f(K: int, lam: DensityParam, sig: Signature) -> MultiPolynomial:
    """Unrenormalized solution f_K = xi_n^K Cscript_K^alpha(s).

    Vanishes identically for finitely many rational lam; use
    ``closed_form_w`` for the family that never degenerates.
    """
    if K < 0:
        raise ValueError("degree must be >= 0")
    body = inflated_Cscript(K, renormalized=False).body
    # Cscript_K(s) = Cscript_K(-t): evaluate the t-polynomial at -t first.
    body = body.substitute(T, -poly(T))
    return _cleared_radial(body, K, sig, _alpha_of_lambda(lam, sig))


def closed_form_w(K: int, lam: DensityParam, sig: Signature) -> MultiPolynomial:
    """The renormalized degree-K singular vector w_K.

    w_(2N) = N! xi_n^(2N) CscriptTilde_(2N)^alpha(s) and
    w_(2N+1) = (N!/2) xi_n^(2N+1) CscriptTilde_(2N+1)^alpha(s) with
    alpha = -lam - (n-1)/2.  Never the zero polynomial: the coefficient
    of (-|xi'|^2)^N is exactly 1.
    """
    if K < 0:
        raise ValueError("degree must be >= 0")
    N = K // 2
    scale = Fraction(factorial(N)) if K % 2 == 0 else Fraction(factorial(N), 2)
    body = inflated_Cscript(K, renormalized=True).body.substitute(T, -poly(T))
    return scale * _cleared_radial(body, K, sig, _alpha_of_lambda(lam, sig))


# -- brute force -------------------------------------------------------


@dataclass
class SolEntry:
    vector: MultiPolynomial
    degree: int
    kind: str  # "gegenbauer" or "harmonic"


@dataclass
class SolBasis:
    degree: int
    lam: Fraction
    ambient: bool
    entries: list[SolEntry] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.entries)


def _operator_matrix(op, source_basis: list[Monomial], target_basis: list[Monomial]):
    """Rows of the matrix of a linear map between monomial bases."""
    cols = [coefficient_vector(op(MultiPolynomial({m: Fraction(1)})), target_basis)
            for m in source_basis]
    rows = []
    for r in range(len(target_basis)):
        rows.append([cols[c][r] for c in range(len(source_basis))])
    return rows


def _kernel_on_basis(ops, basis: list[Monomial]) -> list[MultiPolynomial]:
    """Common kernel of linear maps, via nullspace on stacked matrices.

    Kernels are intersected sequentially (still exact): after the first
    nullspace the remaining operators act on a much smaller space.
    """
    if not basis:
        return []
    ncols = len(basis)
    kernel_vectors = [[Fraction(1) if i == j else Fraction(0) for i in range(ncols)]
                      for j in range(ncols)]
    for op in ops:
        if not kernel_vectors:
            break
        images = []
        degree_drop_targets = None
        for vec in kernel_vectors:
            f = MultiPolynomial({m: c for m, c in zip(basis, vec) if c})
            img = op(f)
            if degree_drop_targets is None:
                degree_drop_targets = set()
            for m, _ in img.terms():
                degree_drop_targets.add(m)
            images.append(img)
        target = sorted(degree_drop_targets or [],
                        key=lambda m: (sum(e for _, e in m), m))
        if not target:
            continue
        rows = []
        img_vectors = [coefficient_vector(img, target) for img in images]
        for r in range(len(target)):
            rows.append([img_vectors[c][r] for c in range(len(kernel_vectors))])
        combo = nullspace(rows)
        new_vectors = []
        for cvec in combo:
            v = [Fraction(0)] * ncols
            for coeff, kv in zip(cvec, kernel_vectors):
                if coeff:
                    for i in range(ncols):
                        if kv[i]:
                            v[i] += coeff * kv[i]
            new_vectors.append(v)
        kernel_vectors = new_vectors
    # normalize so the first nonzero coordinate (canonical monomial
    # order) is +1, matching the raw nullspace convention
    normed = []
    for v in kernel_vectors:
        for c in v:
            if c:
                v = [u / c for u in v]
                break
        normed.append(v)
    return [MultiPolynomial({m: c for m, c in zip(basis, v) if c}) for v in normed]


def brute_force_sol(K: int, lam: Fraction, sig: Signature, ambient: bool = False) -> SolBasis:
    """Exact kernel of {P_j(lam)} on homogeneous degree-K polynomials.

    j runs over 1..n-1, or 1..n when ambient is set.  lam must be a
    rational number; symbolic verification goes through the closed
    forms instead.
    """
    lam = Fraction(lam)
    basis = monomial_basis(sig.xi_vars(), K)
    jmax = sig.n if ambient else sig.n - 1
    ops = [lambda f, j=j: apply_P(j, lam, f, sig) for j in range(1, jmax + 1)]
    vectors = _kernel_on_basis(ops, basis)
    w = closed_form_w(K, lam, sig)
    result = SolBasis(degree=K, lam=lam, ambient=ambient)
    for vec in vectors:
        kind = "gegenbauer" if _proportional(vec, w) else "harmonic"
        result.entries.append(SolEntry(vector=vec, degree=K, kind=kind))
    return result


def _proportional(a: MultiPolynomial, b: MultiPolynomial) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    ta = list(a.terms())
    tb = list(b.terms())
    if [m for m, _ in ta] != [m for m, _ in tb]:
        return False
    ratio = ta[0][1] / tb[0][1]
    return all(ca == ratio * cb for (_, ca), (_, cb) in zip(ta, tb))


# -- harmonics ---------------------------------------------------------


def harmonic_dimension(k: int, nvars: int) -> int:
    """dim of degree-k harmonic polynomials in nvars variables (closed form)."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    d = comb(nvars + k - 1, k)
    if k >= 2:
        d -= comb(nvars + k - 3, k - 2)
    return d


def harmonic_space(k: int, sig: Signature, restrict_to_subgroup: bool = False):
    """Exact basis of degree-k polynomials killed by the Laplacian.

    Plain mode computes the kernel of Box by nullspace.  With the flag
    set, the basis is organized by the xi_n-degree filtration: for each
    j <= k and each degree-j harmonic h in the first n-1 variables, the
    unique extension

        sum_i c_i |xi'|^(2i) xi_n^(k-j-2i) h,  c_0 = 1

    with the recursion c_i 2i (2j + 2i + n - 3) = c_(i-1) (k-j-2i+2)(k-j-2i+1)
    (valid because eps_n = -1).  The flagged mode returns a list of
    (j, [basis of the component]) pairs.
    """
    if k < 0:
        raise ValueError("degree must be >= 0")
    if not restrict_to_subgroup:
        basis = monomial_basis(sig.xi_vars(), k)
        return _kernel_on_basis([lambda f: box(f, sig)], basis)

    components = []
    norm2 = sig.xi_prime_norm2()
    for j in range(k + 1):
        sub_sig_vars = [xi(i) for i in range(1, sig.n)]
        if sig.n - 1 == 0:
            sub_harmonics = [ONE] if j == 0 else []
        else:
            sub_basis = monomial_basis(sub_sig_vars, j)
            sub_harmonics = _kernel_on_basis(
                [lambda f: box(f, sig, upto=sig.n - 1)], sub_basis)
        comp = []
        for h in sub_harmonics:
            f = ZERO
            c = Fraction(1)
            i = 0
            while k - j - 2 * i >= 0:
                term = c * norm2 ** i * MultiPolynomial.monomial(
                    [(xi(sig.n), k - j - 2 * i)] if k - j - 2 * i else [])
                f = f + term * h
                i += 1
                if k - j - 2 * i < 0:
                    break
                c = c * (k - j - 2 * i + 2) * (k - j - 2 * i + 1) \
                    / (2 * i * (2 * j + 2 * i + sig.n - 3))
            comp.append(f)
        components.append((j, comp))
    return components


# -- structural classification -----------------------------------------


@dataclass
class SolPrediction:
    lam: Fraction
    sig: Signature
    ambient: bool
    description: str
    dims: dict  # degree -> predicted dimension for the exceptional degrees

    def dimension(self, K: int) -> int:
        if self.ambient:
            return self.dims.get(K, 0)
        return self.dims.get(K, 1)


def classify_sol(lam: Fraction, sig: Signature, ambient: bool = False) -> SolPrediction:
    """Predicted structure of the solution space at a rational parameter.

    Branch structure for the hyperplane pair: the Gegenbauer tower with
    one line in every degree, plus the harmonic enlargement in degree
    lam+1 when lam is a non-negative integer.  For the ambient system
    the three-branch classification by the parity of n applies, with the
    extra line w_(2 lam + n) exactly when lam + n/2 is a positive
    integer.
    """
    lam = Fraction(lam)
    n = sig.n
    lam_nat = lam.denominator == 1 and lam >= 0
    extra_m = lam + Fraction(n, 2)
    extra_line = extra_m.denominator == 1 and extra_m > 0

    if not ambient:
        dims = {}
        desc = "gegenbauer tower"
        if lam_nat:
            k = int(lam) + 1
            dims[k] = harmonic_dimension(k, n)
            desc = "gegenbauer tower + harmonic enlargement in degree lam+1"
        return SolPrediction(lam, sig, ambient, desc, dims)

    dims = {0: 1}
    parts = ["w_0"]
    if n % 2 == 0:
        if extra_line:
            dims[int(2 * lam + n)] = dims.get(int(2 * lam + n), 0) + 1
            parts.append("w_(2 lam + n)")
        if lam_nat:
            k = int(lam) + 1
            dims[k] = dims.get(k, 0) + harmonic_dimension(k, n)
            parts.append("harmonics in degree lam+1")
    else:
        if extra_line:
            dims[int(2 * lam + n)] = dims.get(int(2 * lam + n), 0) + 1
            parts.append("w_(2 lam + n)")
        elif lam_nat:
            k = int(lam) + 1
            dims[k] = dims.get(k, 0) + harmonic_dimension(k, n)
            parts.append("harmonics in degree lam+1")
    return SolPrediction(lam, sig, ambient, " + ".join(parts), dims)


# -- radial reduction ---------------------------------------------------


@dataclass
class RadialReport:
    K: int
    checked_profiles: int
    ok: bool
    first_discrepancy: str | None = None


def radial_reduction_check(K: int, lam: DensityParam, sig: Signature) -> RadialReport:
    """Verify P_j(xi_n^K h(t)) = 1/2 eps_n eps_j xi_j xi_n^(K-2) R(K,alpha) h.

    Both sides are computed exactly for every monomial profile
    h = t^m, m <= [K/2] (linearity makes the monomial basis equivalent
    to an undetermined-coefficient h) and every j < n, with
    alpha = -lam - (n-1)/2.
    """
    if K < 0:
        raise ValueError("degree must be >= 0")
    alpha_sub = _alpha_of_lambda(lam, sig)
    checked = 0
    for m in range(K // 2 + 1):
        h = MultiPolynomial.monomial([(T, m)] if m else [])
        # f = xi_n^K h(t) with t = eps_n s: the cleared form consumes h(-s).
        f = _cleared_radial(h, K, sig)
        r = ode_residual_R(K, h).substitute(ALPHA, alpha_sub)
        for j in range(1, sig.n):
            lhs = apply_P(j, lam, f, sig)
            prefactor = Fraction(1, 2) * (-1) * sig.eps(j)  # eps_n = -1
            deg_r = r.degree({T})
            shift = 0
            if r and K - 2 - 2 * deg_r < 0:
                shift = 2 * deg_r + 2 - K
            rhs = ZERO
            if r:
                rhs = prefactor * poly(xi(j)) * _cleared_radial(
                    r, K - 2 + shift, sig)
            lhs_cmp = lhs * MultiPolynomial.monomial([(xi(sig.n), shift)] if shift else [])
            checked += 1
            if lhs_cmp != rhs:
                return RadialReport(K, checked, False,
                                    f"profile t^{m}, j={j}: {(lhs_cmp - rhs).text()}")
    return RadialReport(K, checked, True)
