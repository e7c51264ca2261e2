"""Exact sparse multivariate polynomials over the rationals.

Everything downstream (singular vectors, Clifford-valued polynomials,
operator stencils, branching data) is built on the two types in this
module:

* ``Signature`` -- the pseudo-Riemannian signature (p, q) with
  n = p + q - 2 and the metric signs eps_1, ..., eps_n,
* ``MultiPolynomial`` -- an immutable polynomial with ``Fraction``
  coefficients in the variable universe

      L, alpha, t, x, xi1..xin, x1..xn.

``L`` is the formal density parameter, ``alpha`` the formal Gegenbauer
parameter, ``t`` the radial variable, ``x`` the univariate Gegenbauer
variable, ``xi*`` the Fourier-side coordinates and ``x*`` the base-space
coordinates.  Coefficients stay in Q; the formal parameters are ordinary
polynomial variables, never field extensions.

Monomials are kept sparse (no zero exponents) and polynomials are kept
normalized (no zero coefficients).  Term order is graded lexicographic
on the fixed variable order above, ascending, which makes printing and
hashing deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

# Variable codes.  The integer order *is* the canonical variable order.
LAMBDA = 0
ALPHA = 1
T = 2
GX = 3          # the univariate Gegenbauer variable, printed "x"
_XI_BASE = 10   # xi(i) = 10 + i
_X_BASE = 40    # x(i) = 40 + i

Scalar = Union[int, Fraction]


def xi(i: int) -> int:
    """Fourier-side coordinate variable xi_i, 1-based."""
    if i < 1:
        raise ValueError(f"xi index must be >= 1, got {i}")
    return _XI_BASE + i


def x(i: int) -> int:
    """Base-space coordinate variable x_i, 1-based."""
    if i < 1:
        raise ValueError(f"x index must be >= 1, got {i}")
    return _X_BASE + i


def var_index(code: int) -> int:
    """Coordinate index of a xi/x variable (0 for the scalar symbols)."""
    if code >= _X_BASE:
        return code - _X_BASE
    if code >= _XI_BASE:
        return code - _XI_BASE
    return 0


def var_name(code: int) -> str:
    if code == LAMBDA:
        return "L"
    if code == ALPHA:
        return "alpha"
    if code == T:
        return "t"
    if code == GX:
        return "x"
    if _XI_BASE < code < _X_BASE:
        return f"xi{code - _XI_BASE}"
    if code > _X_BASE:
        return f"x{code - _X_BASE}"
    raise ValueError(f"unknown variable code {code}")


def var_from_name(name: str) -> int:
    if name == "L":
        return LAMBDA
    if name == "alpha":
        return ALPHA
    if name == "t":
        return T
    if name == "x":
        return GX
    if name.startswith("xi"):
        return xi(int(name[2:]))
    if name.startswith("x"):
        return x(int(name[1:]))
    raise ValueError(f"unknown variable name {name!r}")


# A monomial is a tuple of (var code, positive exponent) pairs sorted by
# var code.  The empty tuple is the constant monomial.
Monomial = tuple

_ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ca, ea = a[i]
        cb, eb = b[j]
        if ca == cb:
            out.append((ca, ea + eb))
            i += 1
            j += 1
        elif ca < cb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial, codes=None) -> int:
    """Total degree, optionally restricted to a set of variable codes."""
    if codes is None:
        return sum(e for _, e in m)
    return sum(e for c, e in m if c in codes)


def _mono_sort_key(m: Monomial):
    # Graded lexicographic, ascending: lower total degree first, then
    # compare dense exponent vectors in variable order.  A positive
    # exponent on an earlier variable makes the monomial larger, so
    # `-1*xi3^2 + 1*xi1^2` prints in exactly that order.
    deg = mono_degree(m)
    dense = [0] * 80
    for c, e in m:
        dense[c] = e
    return (deg, tuple(dense))


class MultiPolynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    Supports +, -, *, ** with other polynomials, ints and Fractions.
    Construction normalizes away zero coefficients; all operations
    return new objects, so values are safe to share between threads.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        d = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    d[m] = c
        self._terms = d
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c: Scalar) -> "MultiPolynomial":
        c = Fraction(c)
        return MultiPolynomial({_ONE_MONO: c} if c else {})

    @staticmethod
    def variable(code: int) -> "MultiPolynomial":
        return MultiPolynomial({((code, 1),): Fraction(1)})

    @staticmethod
    def monomial(pairs: Iterable[tuple[int, int]], c: Scalar = 1) -> "MultiPolynomial":
        m = tuple(sorted((v, e) for v, e in pairs if e))
        return MultiPolynomial({m: Fraction(c)})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(_ONE_MONO, Fraction(0))

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical (graded-lex ascending) order."""
        for m in sorted(self._terms, key=_mono_sort_key):
            yield m, self._terms[m]

    def variables(self) -> set[int]:
        out = set()
        for m in self._terms:
            for c, _ in m:
                out.add(c)
        return out

    def degree(self, codes=None) -> int:
        """Total degree in the given variables (-1 for the zero polynomial)."""
        if not self._terms:
            return -1
        return max(mono_degree(m, codes) for m in self._terms)

    def is_homogeneous(self, codes=None) -> bool:
        degs = {mono_degree(m, codes) for m in self._terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "MultiPolynomial | None":
        if isinstance(other, MultiPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self._terms)
        for m, c in o._terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        out = MultiPolynomial.__new__(MultiPolynomial)
        out._terms = d
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPolynomial.__new__(MultiPolynomial)
        out._terms = {m: -c for m, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MultiPolynomial()
            out = MultiPolynomial.__new__(MultiPolynomial)
            out._terms = {m: v * c for m, v in self._terms.items()}
            out._hash = None
            return out
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        d: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = d.get(m, 0) + c1 * c2
                if s:
                    d[m] = s
                else:
                    d.pop(m, None)
        out = MultiPolynomial.__new__(MultiPolynomial)
        out._terms = d
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus ------------------------------------------------------

    def diff(self, code: int) -> "MultiPolynomial":
        """Exact formal partial derivative with respect to one variable."""
        d: dict = {}
        for m, c in self._terms.items():
            for i, (vc, e) in enumerate(m):
                if vc == code:
                    if e == 1:
                        nm = m[:i] + m[i + 1:]
                    else:
                        nm = m[:i] + ((vc, e - 1),) + m[i + 1:]
                    d[nm] = d.get(nm, 0) + c * e
                    break
        return MultiPolynomial(d)

    def substitute(self, code: int, value) -> "MultiPolynomial":
        """Substitute a polynomial or rational for one variable.

        Substituting x(n) := 0 realizes restriction to the hyperplane.
        """
        if isinstance(value, (int, Fraction)):
            value = MultiPolynomial.constant(value)
        powers = {0: MultiPolynomial.constant(1)}

        def power(e: int) -> MultiPolynomial:
            if e not in powers:
                powers[e] = power(e - 1) * value
            return powers[e]

        out = MultiPolynomial()
        for m, c in self._terms.items():
            rest = []
            e_sub = 0
            for vc, e in m:
                if vc == code:
                    e_sub = e
                else:
                    rest.append((vc, e))
            term = MultiPolynomial({tuple(rest): c})
            if e_sub:
                term = term * power(e_sub)
            out = out + term
        return out

    def homogeneous_component(self, deg: int, codes=None) -> "MultiPolynomial":
        return MultiPolynomial(
            {m: c for m, c in self._terms.items() if mono_degree(m, codes) == deg}
        )

    # -- text form -----------------------------------------------------

    def text(self) -> str:
        """Canonical textual form, e.g. ``-1*xi3^2 + 1*xi1^2``."""
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            factors = [str(c)]
            for vc, e in m:
                name = var_name(vc)
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"MultiPolynomial({self.text()})"


ZERO = MultiPolynomial()
ONE = MultiPolynomial.constant(1)


def poly(code: int) -> MultiPolynomial:
    return MultiPolynomial.variable(code)


def parse_polynomial(text: str) -> MultiPolynomial:
    """Parse the canonical textual form back into a polynomial.

    Inverse of ``MultiPolynomial.text`` (JSON outputs round-trip
    through this form).
    """
    s = text.strip()
    if s == "0":
        return ZERO
    # Split on top-level " + " / " - " while keeping the sign.
    chunks: list[str] = []
    signs: list[int] = []
    cur = s
    if cur.startswith("-"):
        first_sign = -1
        cur = cur[1:].strip()
    else:
        first_sign = 1
    buf = ""
    i = 0
    sign = first_sign
    while i < len(cur):
        if cur[i] == " " and i + 2 < len(cur) and cur[i + 1] in "+-" and cur[i + 2] == " ":
            chunks.append(buf)
            signs.append(sign)
            sign = 1 if cur[i + 1] == "+" else -1
            buf = ""
            i += 3
        else:
            buf += cur[i]
            i += 1
    chunks.append(buf)
    signs.append(sign)

    result = ZERO
    for sgn, chunk in zip(signs, chunks):
        coeff = Fraction(sgn)
        pairs: list[tuple[int, int]] = []
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            head = factor[0]
            if head.isdigit():
                coeff *= Fraction(factor)
                continue
            if "^" in factor:
                name, _, exp = factor.partition("^")
                pairs.append((var_from_name(name), int(exp)))
            else:
                pairs.append((var_from_name(factor), 1))
        result = result + MultiPolynomial.monomial(pairs, coeff)
    return result


@dataclass(frozen=True)
class Signature:
    """Pseudo-Riemannian signature data.

    p >= 1 and q >= 2, n = p + q - 2.  The metric signs are
    eps_i = +1 for i <= p - 1 and eps_i = -1 for i >= p; in particular
    eps_n = -1.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if self.n < 1:
            raise ValueError(f"p + q - 2 must be >= 1, got {self.n}")

    @property
    def n(self) -> int:
        return self.p + self.q - 2

    def eps(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range 1..{self.n}")
        return 1 if i <= self.p - 1 else -1

    @property
    def epsilon(self) -> tuple[int, ...]:
        return tuple(self.eps(i) for i in range(1, self.n + 1))

    def xi_vars(self) -> list[int]:
        return [xi(i) for i in range(1, self.n + 1)]

    def x_vars(self) -> list[int]:
        return [x(i) for i in range(1, self.n + 1)]

    def xi_prime_norm2(self) -> MultiPolynomial:
        """|xi'|^2 = sum_{i<n} eps_i xi_i^2."""
        out = ZERO
        for i in range(1, self.n):
            out = out + MultiPolynomial.monomial([(xi(i), 2)], self.eps(i))
        return out

    def x_norm2(self, upto: int | None = None) -> MultiPolynomial:
        """|X|^2 = sum_{i<=upto} eps_i x_i^2 (default: all n variables)."""
        m = self.n if upto is None else upto
        out = ZERO
        for i in range(1, m + 1):
            out = out + MultiPolynomial.monomial([(x(i), 2)], self.eps(i))
        return out


def monomial_basis(codes: list[int], degree: int) -> list[Monomial]:
    """All monomials of the exact total degree, in canonical order."""
    if degree < 0:
        return []
    out: list[Monomial] = []

    def rec(pos: int, remaining: int, acc: list[tuple[int, int]]):
        if pos == len(codes) - 1:
            if remaining:
                out.append(tuple(acc + [(codes[pos], remaining)]))
            else:
                out.append(tuple(acc))
            return
        for e in range(remaining + 1):
            rec(pos + 1, remaining - e, acc + ([(codes[pos], e)] if e else []))

    if not codes:
        return [_ONE_MONO] if degree == 0 else []
    rec(0, degree, [])
    out.sort(key=_mono_sort_key)
    return out


def coefficient_vector(f: MultiPolynomial, basis: list[Monomial]) -> list[Fraction]:
    """Coefficients of f on an ordered monomial basis.

    Raises if f has support outside the basis, which would silently
    drop terms otherwise.
    """
    index = {m: i for i, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for m, c in f._terms.items():
        if m not in index:
            raise ValueError(f"monomial {m} outside basis")
        vec[index[m]] = c
    return vec
