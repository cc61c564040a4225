from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superpybe import linalg

entries = st.builds(F, st.integers(-4, 4), st.integers(1, 3))


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(linalg.matrix)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        linalg.as_fraction(0.5)
    with pytest.raises(TypeError):
        linalg.matrix([[1, 0.5]])


def test_inverse_known_value():
    m = linalg.matrix([[2, 1], [1, 1]])
    assert linalg.inverse(m) == linalg.matrix([[1, -1], [-1, 2]])


def test_singular_matrix_has_no_inverse():
    m = linalg.matrix([[1, 2], [2, 4]])
    assert not linalg.is_invertible(m)
    with pytest.raises(ValueError):
        linalg.inverse(m)


def test_nullspace_of_rank_one():
    m = linalg.matrix([[1, 2, 3]])
    basis = linalg.nullspace(m, 3)
    assert len(basis) == 2
    for v in basis:
        assert linalg.matvec(m, v) == (0,)


def test_empty_system_has_full_nullspace():
    assert len(linalg.nullspace((), 3)) == 3


@given(square(3))
@settings(max_examples=60, deadline=None)
def test_inverse_is_two_sided(m):
    if linalg.is_invertible(m):
        inv = linalg.inverse(m)
        assert linalg.matmul(m, inv) == linalg.identity(3)
        assert linalg.matmul(inv, m) == linalg.identity(3)
    else:
        assert linalg.rank(m) < 3


@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    m = linalg.matrix(rows)
    basis = linalg.nullspace(m, 4)
    assert linalg.rank(m) + len(basis) == 4
    for v in basis:
        assert not any(linalg.matvec(m, v))


@given(square(2), square(2), square(2))
@settings(max_examples=40, deadline=None)
def test_matmul_associative_and_transpose_reverses(a, b, c):
    assert linalg.matmul(linalg.matmul(a, b), c) == linalg.matmul(a, linalg.matmul(b, c))
    assert linalg.transpose(linalg.matmul(a, b)) == linalg.matmul(linalg.transpose(b), linalg.transpose(a))
