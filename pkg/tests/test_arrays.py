from fractions import Fraction

import pytest

from octarray import (
    Array,
    ValidationError,
    central_reverse,
    col_sums,
    concat,
    diag,
    integrate,
    is_d_tight,
    is_l_tight,
    is_r_tight,
    is_u_tight,
    mixed_derivative,
    row_sums,
    split,
    transpose,
)


def test_array_basic():
    a = Array([[2, 3, 1], [1, 1, 5]])
    assert (a.n, a.m) == (3, 2)
    assert a.mass(1, 1) == 2 and a.mass(3, 2) == 5
    assert a.total() == 13


def test_array_rejects_negative_and_ragged():
    with pytest.raises(ValidationError):
        Array([[1, -1]])
    with pytest.raises(ValidationError):
        Array([[1, 2], [3]])


def test_integrate_and_mixed_derivative_invert():
    a = Array([[2, Fraction(1, 2)], [0, 3]])
    assert mixed_derivative(integrate(a)) == a


def test_integrate_values():
    a = Array([[2, 3, 1], [1, 1, 5]])
    f = integrate(a)
    assert f.value(0, 0) == 0
    assert f.value(3, 1) == 6
    assert f.value(3, 2) == 13
    assert f.value(2, 2) == 7


def test_mixed_derivative_rejects_non_supermodular():
    f = integrate(Array([[1, 0], [0, 1]]))
    pts = {p: f.value(*p) for p in f.points()}
    pts[(1, 1)] = 2  # makes one mixed difference negative
    from octarray.arrays import CornerFunction

    rows = [[pts[(i, j)] for i in range(3)] for j in range(3)]
    with pytest.raises(ValidationError):
        mixed_derivative(CornerFunction(rows))


def test_concat_split():
    a = Array([[1, 2], [3, 4]])
    b = Array([[5], [6]])
    c = concat(a, b)
    assert c.rows == ((1, 2, 5), (3, 4, 6))
    assert split(c, 2) == (a, b)


def test_transpose_and_central_reverse():
    a = Array([[1, 2, 3], [4, 5, 6]])
    assert transpose(a).rows == ((1, 4), (2, 5), (3, 6))
    assert central_reverse(a).rows == ((6, 5, 4), (3, 2, 1))
    assert central_reverse(central_reverse(a)) == a


def test_diag_and_sums():
    d = diag((3, 2, 0))
    assert d.rows == ((3, 0, 0), (0, 2, 0), (0, 0, 0))
    assert row_sums(d) == (3, 2, 0)
    assert col_sums(d) == (3, 2, 0)


def test_tightness_predicates():
    a = Array([[5, 1, 2, 4], [0, 4, 0, 4], [0, 0, 0, 3]])
    assert is_d_tight(a)
    assert is_u_tight(central_reverse(a))
    assert is_l_tight(transpose(a))
    assert is_r_tight(transpose(central_reverse(a)))
    assert not is_d_tight(Array([[0, 1], [1, 0]]))


def test_d_tight_vanishes_above_diagonal():
    # columns strictly left of the row index must be empty
    a = Array([[1, 1], [1, 0]])
    assert not is_d_tight(a)
