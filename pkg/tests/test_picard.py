import pytest
from hypothesis import given, settings, strategies as st

from inouebloch.picard import (
    DivisorClass, anticanonical_class, arithmetic_genus, canonical_class, exceptional,
    gram_matrix, intersect, line_class, parse_class, zero,
)
from oracles import intersect_by_gram

DELTA1 = DivisorClass(1, (1, 0, 1, 0, 0, 0))
F1 = DivisorClass(2, (0, 1, 0, 1, 1, 1))
F2 = DivisorClass(2, (1, 0, 1, 0, 1, 1))
S1 = DivisorClass(1, (1, 1, 0, 0, 1, 0))


def test_named_curve_relations():
    assert intersect(DELTA1, F1) == 2
    assert intersect(F1, F1) == 0
    assert intersect(F1, F2) == 2


def test_line_squared():
    assert intersect(line_class(), line_class()) == 1


def test_canonical_class():
    K = canonical_class()
    assert K.vector == (-3, -1, -1, -1, -1, -1, -1)
    assert (K + DELTA1 + F1).is_zero()
    assert intersect(K, K) == 3
    # K.E = -1 for a (-1)-curve; the stored unit vector m = (1,0,..) is -E_1
    assert intersect(K, exceptional(1)) == -1
    assert intersect(K, DivisorClass(0, (1, 0, 0, 0, 0, 0))) == 1


def test_exceptional_sign_convention():
    # E_1 is stored with m_1 = -1 since classes read a*L - sum m_i E_i
    assert exceptional(1) == DivisorClass(0, (-1, 0, 0, 0, 0, 0))
    assert intersect(exceptional(2), exceptional(2)) == -1
    assert line_class() - exceptional(1) - exceptional(3) == DELTA1


def test_exceptional_index_range():
    with pytest.raises(ValueError):
        exceptional(7)


@pytest.mark.parametrize("d, genus", [(S1, 0), (line_class(), 0), (anticanonical_class(), 1), (DivisorClass(3, (0,) * 6), 1)])
def test_arithmetic_genus(d, genus):
    assert arithmetic_genus(d) == genus


def test_gram_matrix_is_diagonal_signature_1_6():
    g = gram_matrix()
    assert g == [[(1 if i == 0 else -1) if i == j else 0 for j in range(7)] for i in range(7)]


def test_mismatched_lengths_rejected():
    with pytest.raises(ValueError):
        intersect(DivisorClass(1, (0, 0)), line_class())


@pytest.mark.parametrize("text, expected", [
    ("1,1,0,1,0,0,0", DELTA1),
    ("0,0,0,0,0,0,0", zero()),
    (" 9, 3,4 ,3,4,4,4 ", DivisorClass(9, (3, 4, 3, 4, 4, 4))),
])
def test_parse_class(text, expected):
    assert parse_class(text) == expected


@pytest.mark.parametrize("text", ["1,2,3", "1,1,0,1,0,0,x", ""])
def test_parse_class_errors(text):
    with pytest.raises(ValueError):
        parse_class(text)


coeff = st.integers(-12, 12)
classes = st.builds(lambda a, m: DivisorClass(a, tuple(m)), coeff, st.lists(coeff, min_size=6, max_size=6))


@settings(max_examples=50)
@given(classes, classes, classes, st.integers(-5, 5))
def test_form_is_bilinear_and_symmetric(x, y, z, s):
    assert intersect(x + s * y, z) == intersect(x, z) + s * intersect(y, z)
    assert intersect(x, y) == intersect(y, x)
    assert intersect(x, y) == intersect_by_gram(x, y)


@given(classes)
def test_adjunction_parity(d):
    assert (intersect(d, d) + intersect(d, canonical_class())) % 2 == 0
    arithmetic_genus(d)
