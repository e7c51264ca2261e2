"""Exact linear algebra over the rationals.

The nullspace routine is the brute-force oracle behind every solution
space computed in this package, so it is deliberately boring: pivots
are chosen in column order (first nonzero row wins), elimination is
fraction-free over the integers internally, and the returned basis is
normalized so the first nonzero entry of each vector is +1.  Identical
input always produces identical output.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = Sequence[Fraction]


def _to_int_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        fracs = [Fraction(v) for v in row]
        denom = 1
        for v in fracs:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ints = [int(v * denom) for v in fracs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _row_echelon(rows) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form with pivots in column order.

    Returns (echelon rows, pivot column list).  Rows are combined with
    cross-multiplication so everything stays integral; each produced row
    is divided by its content to keep entries small.
    """
    mat = _to_int_rows(rows)
    mat = [r for r in mat if any(r)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    echelon: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        pivot_row = None
        for r in mat:
            if r[col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat.remove(pivot_row)
        p = pivot_row[col]
        reduced = []
        for r in mat:
            if r[col]:
                q = r[col]
                new = [p * a - q * b for a, b in zip(r, pivot_row)]
                g = 0
                for v in new:
                    g = gcd(g, abs(v))
                if g > 1:
                    new = [v // g for v in new]
                if any(new):
                    reduced.append(new)
            else:
                reduced.append(r)
        mat = reduced
        echelon.append(pivot_row)
        pivots.append(col)
    return echelon, pivots


def rank(rows) -> int:
    rows = list(rows)
    if not rows:
        return 0
    _, pivots = _row_echelon(rows)
    return len(pivots)


def nullspace(rows) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix.

    Empty list when the kernel is {0}.  Each basis vector corresponds to
    one non-pivot column (pivot order = column order) and is scaled so
    its first nonzero entry equals +1, e.g. [[1, 1]] -> [(1, -1)].
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError("rows must all have the same length")
    echelon, pivots = _row_echelon(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        # Back-substitute from the bottom pivot up.
        for i in range(len(pivots) - 1, -1, -1):
            row = echelon[i]
            col = pivots[i]
            s = Fraction(0)
            for j in range(col + 1, ncols):
                if row[j] and vec[j]:
                    s += Fraction(row[j]) * vec[j]
            if s:
                vec[col] = -s / row[col]
        for v in vec:
            if v:
                if v != 1:
                    vec = [u / v for u in vec]
                break
        basis.append(vec)
    return basis


def in_span(basis_rows, target) -> bool:
    """Exact membership of a vector in the row span of a matrix."""
    basis_rows = [list(r) for r in basis_rows]
    r0 = rank(basis_rows)
    return rank(basis_rows + [list(target)]) == r0


def span_contains_all(basis_rows, targets) -> bool:
    basis_rows = [list(r) for r in basis_rows]
    r0 = rank(basis_rows)
    rows = list(basis_rows)
    for t in targets:
        rows.append(list(t))
    return rank(rows) == r0


def _sparse_reduce(row: dict, echelon: dict) -> dict:
    """Reduce a sparse row against an echelon {pivot_col: row} mapping."""
    row = dict(row)
    while row:
        c = min(row)
        if c not in echelon:
            return row
        piv = echelon[c]
        factor = row[c] / piv[c]
        for col, val in piv.items():
            s = row.get(col, Fraction(0)) - factor * val
            if s:
                row[col] = s
            else:
                row.pop(col, None)
    return row


def sparse_span_contains_all(basis_rows: list[dict], targets: list[dict]) -> bool:
    """Membership of every target in the span of sparse rows.

    Rows are {column index: Fraction} dicts; columns are eliminated in
    increasing order.  Built for the very sparse membership systems in
    the factorization checks, where dense elimination would be wasteful.
    """
    echelon: dict[int, dict] = {}
    for row in basis_rows:
        red = _sparse_reduce(row, echelon)
        if red:
            echelon[min(red)] = red
    for t in targets:
        if _sparse_reduce(t, echelon):
            return False
    return True
