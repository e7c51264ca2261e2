"""Exact nullspace and membership tests."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from vermaops.linalg import (
    in_span,
    nullspace,
    rank,
    sparse_span_contains_all,
)


def test_full_rank_empty_kernel():
    assert nullspace([[1, 0], [0, 1]]) == []


def test_single_relation():
    assert nullspace([[1, 1]]) == [[Fraction(1), Fraction(-1)]]


def test_kernel_vectors_annihilate_rows():
    rows = [
        [1, 2, 3, 4],
        [0, 1, -1, 2],
        [1, 3, 2, 6],
    ]
    basis = nullspace(rows)
    assert len(basis) == 4 - rank(rows)
    for vec in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


def test_normalization_first_nonzero_is_one():
    basis = nullspace([[0, 2, 4]])
    for vec in basis:
        lead = next(v for v in vec if v)
        assert lead == 1


def test_deterministic():
    rows = [[Fraction(1, 3), 1, 0], [2, 0, Fraction(-1, 7)]]
    assert nullspace(rows) == nullspace(rows)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4),
                min_size=1, max_size=5))
def test_rank_nullity(rows):
    ker = nullspace(rows)
    assert rank(rows) + len(ker) == 4
    for vec in ker:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


def test_in_span():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert in_span(rows, [2, 3, 5])
    assert not in_span(rows, [0, 0, 1])


def test_sparse_membership_matches_dense():
    span = [{0: Fraction(1), 2: Fraction(1)}, {1: Fraction(1), 2: Fraction(1)}]
    assert sparse_span_contains_all(span, [{0: Fraction(2), 1: Fraction(3), 2: Fraction(5)}])
    assert not sparse_span_contains_all(span, [{2: Fraction(1)}])
