"""Infinitesimal characters, decomposition verdicts, factorization.

Characters are vectors of rationals compared modulo the Weyl group of
type B (signed permutations) or type D (even sign changes): the
canonical form sorts absolute values and, in type D, keeps the sign
parity bit unless some entry vanishes.

Decomposition reports cover the restriction of a scalar-density module
to the hyperplane subalgebra.  With lam_j = (1 - n + j)/2, parameters
fall into three classes:

* generic (2 lam + n not an integer >= 2): direct sum, one summand for
  each non-negative integer b,
* lam = lam_j with j odd: characters collide in pairs (b, j - b) but
  the even/odd splitting of the module keeps the sum direct,
* lam = lam_j with j = 2k: the pairs (a, 2k - a), a < k, form
  non-split extensions; the machine-checked content is the character
  coincidence and the Fourier-side submodule inclusion coming from the
  factorization identity f_(2k-a) = (sum eps_i xi_i^2)^(k-a) f_a.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .gegenbauer import gegenbauer_C, inflated_Cscript
from .linalg import sparse_span_contains_all
from .polynomial import (
    ALPHA,
    T,
    GX,
    MultiPolynomial,
    Signature,
    coefficient_vector,
    monomial_basis,
    poly,
    xi,
)
from .scalar import closed_form_f, closed_form_w


def lambda_j(j: int, n: int) -> Fraction:
    """The exceptional parameter (1 - n + j)/2."""
    return Fraction(1 - n + j, 2)


def exceptional_index(lam: Fraction, n: int) -> Optional[int]:
    """j >= 1 with lam = lambda_j, or None when the parameter is generic."""
    j = 2 * Fraction(lam) + n - 1
    if j.denominator == 1 and j >= 1:
        return int(j)
    return None


def is_generic(lam: Fraction, n: int) -> bool:
    """True iff 2 lam + n is not an integer >= 2."""
    v = 2 * Fraction(lam) + n
    return not (v.denominator == 1 and v >= 2)


def irreducibility_test(lam: Fraction, n: int) -> bool:
    """Irreducibility of the scalar-density module at parameter lam.

    n even: lam + n/2 not a positive integer.  n odd: additionally lam
    not a non-negative integer.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    lam = Fraction(lam)
    v = lam + Fraction(n, 2)
    extra = v.denominator == 1 and v >= 1
    if n % 2 == 0:
        return not extra
    nat = lam.denominator == 1 and lam >= 0
    return not (extra or nat)


@dataclass(frozen=True)
class CharacterVector:
    entries: tuple
    weyl_type: str  # "B" or "D"

    def canonical(self):
        abs_sorted = tuple(sorted((abs(e) for e in self.entries), reverse=True))
        if self.weyl_type == "B":
            return ("B", abs_sorted)
        has_zero = any(e == 0 for e in self.entries)
        if has_zero:
            return ("D", abs_sorted, None)
        parity = sum(1 for e in self.entries if e < 0) % 2
        return ("D", abs_sorted, parity)

    def __eq__(self, other):
        if not isinstance(other, CharacterVector):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def as_strings(self) -> list[str]:
        return [str(e) for e in self.entries]


def _weyl_type_for_rank_algebra(dim_so: int) -> str:
    # so(2m+1) is type B, so(2m) is type D
    return "B" if dim_so % 2 == 1 else "D"


def inf_char_scalar(lam: Fraction, b: int, n: int) -> CharacterVector:
    """Character of the summand at depth b in the scalar restriction.

    The vector is (lam - b + (n-1)/2, (n-3)/2, (n-5)/2, ...) with
    [(n+1)/2] entries, compared modulo the Weyl group of so(n+1).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    lam = Fraction(lam)
    rank = (n + 1) // 2
    entries = [lam - b + Fraction(n - 1, 2)]
    for i in range(1, rank):
        entries.append(Fraction(n - 1 - 2 * i, 2))
    return CharacterVector(tuple(entries), _weyl_type_for_rank_algebra(n + 1))


def inf_char_spinor(lam: Fraction, b: int, n: int, epsilon: int = 1) -> CharacterVector:
    """Character of the spinor summand at depth b (and half-spin sign
    epsilon when n is odd)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    lam = Fraction(lam)
    head = lam - b + Fraction(n - 1, 2)
    if n % 2 == 1:
        # (head, (n-2)/2, (n-4)/2, ..., 3/2, eps/2), length (n+1)/2
        entries = [head] + [Fraction(v, 2) for v in range(n - 2, 2, -2)] \
            + [Fraction(epsilon, 2)]
        return CharacterVector(tuple(entries), "D")
    # (head, n/2 - 1, ..., 2, 1), length n/2
    entries = [head] + [Fraction(v) for v in range(n // 2 - 1, 0, -1)]
    return CharacterVector(tuple(entries), "B")


@dataclass
class Summand:
    b: int
    character: CharacterVector
    partner: Optional[int] = None
    epsilon: Optional[int] = None


@dataclass
class BranchReport:
    lam: Fraction
    n: int
    spinor: bool
    verdict: str
    summands: list[Summand] = field(default_factory=list)
    truncated_at: int = 0
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "n": self.n,
            "spinor": self.spinor,
            "verdict": self.verdict,
            "summands": [
                {
                    "b": s.b,
                    "character": s.character.as_strings(),
                    "partner": s.partner,
                    **({"epsilon": "+" if s.epsilon == 1 else "-"}
                       if s.epsilon is not None else {}),
                }
                for s in self.summands
            ],
            "truncated_at": self.truncated_at,
            "notes": list(self.notes),
        }


def default_bmax(lam: Fraction, n: int) -> int:
    v = abs(2 * Fraction(lam) + n)
    return 2 * int(v) + 8


def scalar_branch_report(lam: Fraction, n: int, b_max: int | None = None) -> BranchReport:
    """Decomposition report for the scalar restriction at parameter lam.

    The infinite sum over b is truncated at b_max (visible in the
    report).  Non-split extension pairs are reported as partner links;
    the extension itself is carried as structural metadata, the
    machine-checked facts being the character coincidences and the
    factorization inclusions (see ``factorization_witness``).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    lam = Fraction(lam)
    if b_max is None:
        b_max = default_bmax(lam, n)
    j = exceptional_index(lam, n)
    report = BranchReport(lam=lam, n=n, spinor=False, verdict="", truncated_at=b_max)
    if j is None:
        report.verdict = "generic_direct_sum"
    elif j % 2 == 1:
        report.verdict = "odd_exceptional_direct_sum"
        report.notes.append(
            "characters collide in pairs (b, j-b) but the even/odd degree "
            "splitting keeps the sum direct")
    else:
        report.verdict = "even_exceptional_with_extensions"
        k = j // 2
        report.notes.append(
            f"non-split extension pairs (a, {j}-a) for a = 0..{k - 1}; "
            "singleton at b = " + str(k))
    for b in range(b_max + 1):
        partner = None
        if j is not None and j % 2 == 0 and 0 <= j - b <= b_max and b != j - b:
            partner = j - b
        report.summands.append(Summand(b=b, character=inf_char_scalar(lam, b, n),
                                       partner=partner))
    return report


def spinor_branch_report(lam: Fraction, n: int, b_max: int | None = None) -> BranchReport:
    """Decomposition report for the spinor restriction.

    Direct-sum verdict iff both conditions hold: lam + n - 3/2 is not a
    positive integer and 2 lam + n - 1 is not a positive integer.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    lam = Fraction(lam)
    if b_max is None:
        b_max = default_bmax(lam, n)
    c1 = lam + n - Fraction(3, 2)
    c2 = 2 * lam + n - 1
    cond1 = not (c1.denominator == 1 and c1 >= 1)
    cond2 = not (c2.denominator == 1 and c2 >= 1)
    verdict = "irreducible_direct_sum" if (cond1 and cond2) else "not_necessarily_direct"
    report = BranchReport(lam=lam, n=n, spinor=True, verdict=verdict,
                          truncated_at=b_max)
    report.notes.append(f"condition lam+n-3/2 not in N_+: {cond1}")
    report.notes.append(f"condition 2lam+n-1 not in N_+: {cond2}")
    for b in range(b_max + 1):
        if n % 2 == 1:
            for eps in (1, -1):
                report.summands.append(Summand(
                    b=b, character=inf_char_spinor(lam, b, n, eps), epsilon=eps))
        else:
            report.summands.append(Summand(
                b=b, character=inf_char_spinor(lam, b, n)))
    return report


def character_collisions(lam: Fraction, n: int, b_max: int) -> list[tuple[int, int]]:
    """All pairs b < b' <= b_max with equal canonical characters."""
    chars = [inf_char_scalar(lam, b, n) for b in range(b_max + 1)]
    out = []
    for b in range(b_max + 1):
        for bp in range(b + 1, b_max + 1):
            if chars[b] == chars[bp]:
                out.append((b, bp))
    return out


# -- factorization identities -------------------------------------------


@dataclass
class FactorizationReport:
    k: int
    a: int
    f_difference: MultiPolynomial
    gegenbauer_ok: bool
    w_multiple: Optional[Fraction]

    @property
    def ok(self) -> bool:
        return self.f_difference.is_zero() and self.gegenbauer_ok


def factorization_witness(k: int, a: int, sig: Signature) -> FactorizationReport:
    """Exact check of f_(2k-a) = (sum eps_i xi_i^2)^(k-a) f_a at lam_(2k).

    Also checks the underlying polynomial identities at alpha = -k:
    C_a^(-k) = C_(2k-a)^(-k) and the inflated version.  Reports the
    scalar relating the renormalized vectors w as a byproduct.
    """
    if a > k:
        raise ValueError("requires a <= k")
    n = sig.n
    lam = lambda_j(2 * k, n)
    f_a = closed_form_f(a, lam, sig)
    f_big = closed_form_f(2 * k - a, lam, sig)
    diff = f_big - sig.xi_prime_norm2() ** (k - a) * f_a

    c_small = gegenbauer_C(a).body.substitute(ALPHA, Fraction(-k))
    c_big = gegenbauer_C(2 * k - a).body.substitute(ALPHA, Fraction(-k))
    s_small = inflated_Cscript(a).body.substitute(ALPHA, Fraction(-k))
    s_big = inflated_Cscript(2 * k - a).body.substitute(ALPHA, Fraction(-k))
    geg_ok = (c_small == c_big) and (
        s_big == MultiPolynomial.monomial([(T, k - a)] if k > a else []) * s_small)

    w_a = closed_form_w(a, lam, sig)
    w_big = closed_form_w(2 * k - a, lam, sig)
    prod = sig.xi_prime_norm2() ** (k - a) * w_a
    mult = None
    if not w_big.is_zero() and not prod.is_zero():
        terms_big = list(w_big.terms())
        terms_prod = list(prod.terms())
        if [m for m, _ in terms_big] == [m for m, _ in terms_prod]:
            ratio = terms_big[0][1] / terms_prod[0][1]
            if all(cb == ratio * cp for (_, cb), (_, cp) in zip(terms_big, terms_prod)):
                mult = ratio
    return FactorizationReport(k, a, diff, geg_ok, mult)


def submodule_inclusion_holds(k: int, a: int, sig: Signature, max_degree: int) -> bool:
    """Degree-by-degree membership of the smaller Fourier-side module.

    Checks Pol[xi_1..xi_(n-1)] w_(2k-a) subset Pol[xi_1..xi_(n-1)] w_a
    at lam_(2k), for every total degree up to max_degree: each monomial
    multiple of w_(2k-a) must lie in the span of the matching monomial
    multiples of w_a.  Sparse elimination: the products have a handful
    of terms each, regardless of degree.
    """
    n = sig.n
    lam = lambda_j(2 * k, n)
    w_a = closed_form_w(a, lam, sig)
    w_big = closed_form_w(2 * k - a, lam, sig)
    prime_vars = [xi(i) for i in range(1, n)]
    all_vars = sig.xi_vars()
    for d in range(2 * k - a, max_degree + 1):
        deg_small = d - a
        deg_big = d - (2 * k - a)
        if deg_big < 0:
            continue
        target_index = {m: i for i, m in enumerate(monomial_basis(all_vars, d))}

        def sparse_row(f: MultiPolynomial) -> dict:
            return {target_index[m]: c for m, c in f._terms.items()}

        span_rows = [sparse_row(MultiPolynomial({m: Fraction(1)}) * w_a)
                     for m in monomial_basis(prime_vars, deg_small)]
        member_rows = [sparse_row(MultiPolynomial({m: Fraction(1)}) * w_big)
                       for m in monomial_basis(prime_vars, deg_big)]
        if not sparse_span_contains_all(span_rows, member_rows):
            return False
    return True


def xi_n_top_coefficient(K: int, lam: Fraction, sig: Signature) -> Fraction:
    """Coefficient of xi_n^K in w_K; nonzero whenever K <= lam + 1 for
    natural lam (the triangularity that drives the degree induction)."""
    w = closed_form_w(K, lam, sig)
    mono = ((xi(sig.n), K),) if K else ()
    return w.coefficient(mono)
