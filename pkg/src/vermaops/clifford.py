"""Clifford algebra with polynomial coefficients.

Blades are strictly increasing index tuples over the generators
e_1, ..., e_n with relations e_i^2 = -eps_i and e_i e_j = -e_j e_i for
i != j.  A ``CliffordPolynomial`` maps blades to ``MultiPolynomial``
components; all operators in this package act by left multiplication
and coordinate derivatives, so verification in this model transfers to
any spinor module (the left regular representation is faithful).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .polynomial import MultiPolynomial, Signature, ONE, ZERO, poly, xi, x

Blade = tuple  # strictly increasing tuple of generator indices
IDENTITY_BLADE: Blade = ()

ScalarLike = Union[int, Fraction, MultiPolynomial]


def blade_mul(a: Blade, b: Blade, sig: Signature) -> tuple[int, Blade]:
    """Product of two basis blades: returns (sign, blade).

    Sign counts the transpositions needed to merge the factors plus a
    -eps_i for every contracted pair e_i e_i.
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = list(a)
    sign = 1
    for gen in b:
        # insert gen into out, anticommuting past larger indices from the right
        pos = len(out)
        while pos > 0 and out[pos - 1] > gen:
            pos -= 1
            sign = -sign
        if pos > 0 and out[pos - 1] == gen:
            # contraction e_gen e_gen = -eps_gen
            out.pop(pos - 1)
            sign = -sign if sig.eps(gen) == 1 else sign
        else:
            out.insert(pos, gen)
    return sign, tuple(out)


def blade_name(b: Blade) -> str:
    if not b:
        return "1"
    return "e" + "".join(str(i) for i in b)


class CliffordPolynomial:
    """Element of Pol[xi or x] tensor the Clifford algebra.

    Immutable by convention; components with zero polynomial are not
    stored.  Supports +, -, scalar and polynomial multiplication, and
    exact Clifford products via ``mul``.
    """

    __slots__ = ("_comp",)

    def __init__(self, components: Mapping[Blade, MultiPolynomial] | None = None):
        d = {}
        if components:
            for b, p in components.items():
                if isinstance(p, (int, Fraction)):
                    p = MultiPolynomial.constant(p)
                if not p.is_zero():
                    d[tuple(b)] = p
        self._comp = d

    # -- constructors ---------------------------------------------------

    @staticmethod
    def scalar(p: ScalarLike) -> "CliffordPolynomial":
        if isinstance(p, (int, Fraction)):
            p = MultiPolynomial.constant(p)
        return CliffordPolynomial({IDENTITY_BLADE: p})

    @staticmethod
    def blade(indices: Iterable[int], coeff: ScalarLike = 1) -> "CliffordPolynomial":
        if isinstance(coeff, (int, Fraction)):
            coeff = MultiPolynomial.constant(coeff)
        return CliffordPolynomial({tuple(indices): coeff})

    # -- queries ----------------------------------------------------------

    def components(self):
        for b in sorted(self._comp, key=lambda bl: (len(bl), bl)):
            yield b, self._comp[b]

    def component(self, b: Blade) -> MultiPolynomial:
        return self._comp.get(tuple(b), ZERO)

    def blades(self) -> list[Blade]:
        return sorted(self._comp, key=lambda bl: (len(bl), bl))

    def is_zero(self) -> bool:
        return not self._comp

    def __bool__(self):
        return bool(self._comp)

    def degree(self, codes=None) -> int:
        if not self._comp:
            return -1
        return max(p.degree(codes) for p in self._comp.values())

    def is_homogeneous(self, codes=None) -> bool:
        degs = set()
        for p in self._comp.values():
            if not p.is_homogeneous(codes):
                return False
            degs.add(p.degree(codes))
        return len(degs) <= 1

    def blade_parity_split(self) -> tuple["CliffordPolynomial", "CliffordPolynomial"]:
        even = {b: p for b, p in self._comp.items() if len(b) % 2 == 0}
        odd = {b: p for b, p in self._comp.items() if len(b) % 2 == 1}
        return CliffordPolynomial(even), CliffordPolynomial(odd)

    # -- linear structure ---------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        d = dict(self._comp)
        for b, p in other._comp.items():
            s = d.get(b, ZERO) + p
            if s.is_zero():
                d.pop(b, None)
            else:
                d[b] = s
        return CliffordPolynomial(d)

    def __neg__(self):
        return CliffordPolynomial({b: -p for b, p in self._comp.items()})

    def __sub__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Multiplication by a scalar polynomial (commutative factor)."""
        if isinstance(other, (int, Fraction, MultiPolynomial)):
            if isinstance(other, (int, Fraction)):
                other = MultiPolynomial.constant(other)
            return CliffordPolynomial({b: p * other for b, p in self._comp.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self._comp == other._comp

    def __hash__(self):
        return hash(frozenset(self._comp.items()))

    # -- calculus -------------------------------------------------------

    def diff(self, code: int) -> "CliffordPolynomial":
        return CliffordPolynomial({b: p.diff(code) for b, p in self._comp.items()})

    def substitute(self, code: int, value) -> "CliffordPolynomial":
        return CliffordPolynomial({b: p.substitute(code, value) for b, p in self._comp.items()})

    # -- text -------------------------------------------------------------

    def text(self) -> str:
        if not self._comp:
            return "0"
        parts = []
        for b, p in self.components():
            parts.append(f"[{blade_name(b)}] {p.text()}")
        return " ; ".join(parts)

    def __repr__(self):
        return f"CliffordPolynomial({self.text()})"


def clifford_mul(a: CliffordPolynomial, b: CliffordPolynomial, sig: Signature) -> CliffordPolynomial:
    """Exact Clifford product; signs from transpositions and contractions."""
    d: dict = {}
    for ba, pa in a._comp.items():
        for bb, pb in b._comp.items():
            sign, blade = blade_mul(ba, bb, sig)
            prod = pa * pb
            if sign < 0:
                prod = -prod
            cur = d.get(blade)
            s = prod if cur is None else cur + prod
            if s.is_zero():
                d.pop(blade, None)
            else:
                d[blade] = s
    return CliffordPolynomial(d)


def left_mul_blade(indices: Blade, F: CliffordPolynomial, sig: Signature,
                   coeff: ScalarLike = 1) -> CliffordPolynomial:
    return clifford_mul(CliffordPolynomial.blade(indices, coeff), F, sig)


def xi_prime_underline(sig: Signature) -> CliffordPolynomial:
    """The element sum_{j<n} eps_j e_j xi_j."""
    out = CliffordPolynomial()
    for j in range(1, sig.n):
        out = out + CliffordPolynomial.blade((j,), sig.eps(j) * poly(xi(j)))
    return out


def xi_n_underline(sig: Signature) -> CliffordPolynomial:
    """The element eps_n e_n xi_n = -e_n xi_n."""
    return CliffordPolynomial.blade((sig.n,), sig.eps(sig.n) * poly(xi(sig.n)))


def x_underline(sig: Signature, upto: int | None = None) -> CliffordPolynomial:
    """The element sum_i x_i e_i over the base coordinates (default all n)."""
    m = sig.n if upto is None else upto
    out = CliffordPolynomial()
    for i in range(1, m + 1):
        out = out + CliffordPolynomial.blade((i,), poly(x(i)))
    return out


def dirac(F: CliffordPolynomial, sig: Signature, primed: bool = False,
          coords: str = "xi") -> CliffordPolynomial:
    """Dirac operator sum_k e_k d/dxi_k (k <= n-1 when primed).

    ``coords`` selects xi- or x-side differentiation; the Clifford
    factor is applied by left multiplication.  D^2 = -Box.
    """
    var = xi if coords == "xi" else x
    m = sig.n - 1 if primed else sig.n
    out = CliffordPolynomial()
    for k in range(1, m + 1):
        out = out + left_mul_blade((k,), F.diff(var(k)), sig)
    return out


def reversal(F: CliffordPolynomial) -> CliffordPolynomial:
    """The reversal antiautomorphism: e_i1 ... e_ik -> e_ik ... e_i1.

    Multiplies a grade-k component by (-1)^(k(k-1)/2); it transposes
    left multiplications with respect to the standard pairing, which is
    how value actions transfer between the two sides of the duality.
    """
    out = {}
    for b, p in F._comp.items():
        k = len(b)
        if (k * (k - 1) // 2) % 2:
            out[b] = -p
        else:
            out[b] = p
    return CliffordPolynomial(out)


def all_blades(n: int) -> list[Blade]:
    out: list[Blade] = [IDENTITY_BLADE]
    for i in range(1, n + 1):
        out.extend(b + (i,) for b in list(out))
    return sorted(out, key=lambda bl: (len(bl), bl))
