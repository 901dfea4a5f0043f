from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from inouebloch import linalg


def test_rank_of_identity():
    assert linalg.rank([[1, 0], [0, 1]]) == 2


def test_rank_skips_zero_column():
    m = [[0, 1, 2], [0, 2, 4], [0, 1, 3]]
    assert linalg.bareiss_rank(m) == 2
    assert linalg.gauss_rank(m) == 2


def test_rational_rows_are_scaled_not_rounded():
    m = [[Fraction(1, 3), Fraction(2, 3)], [1, 2]]
    assert linalg.bareiss_rank(m) == 1


def test_nullity_of_empty_matrix_is_column_count():
    assert linalg.nullity([], 5) == 5


def test_in_row_span():
    basis, pivots = linalg.rref([[1, 1, 0], [0, 1, 1]])
    assert linalg.in_row_span([1, 2, 1], basis, pivots)
    assert not linalg.in_row_span([1, 0, 0], basis, pivots)
    assert linalg.in_row_span([0, 0, 0], basis, pivots)


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(
        st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=c, max_size=c),
        min_size=1, max_size=7,
    )
)


@settings(max_examples=30, deadline=None)
@given(matrices)
def test_bareiss_agrees_with_gauss_and_sympy(m):
    r = linalg.bareiss_rank(m)
    assert r == linalg.gauss_rank(m)
    assert r == sympy.Matrix(m).rank()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4), st.integers(2, 5))
def test_duplicated_rows_do_not_add_rank(rows, times):
    assert linalg.rank(rows * times) == linalg.rank(rows)
