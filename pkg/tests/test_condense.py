import random
from fractions import Fraction

import pytest

from octarray import (
    Array,
    ValidationError,
    central_reverse,
    condense_down,
    condense_left,
    condense_pair,
    condense_right,
    condense_up,
    is_d_tight,
    is_l_tight,
    row_sums,
    schutzenberger,
    shape,
    transpose,
)
from octarray import serialize


def test_condense_pair_worked_step():
    u2, v2 = condense_pair((2, 3, 1), (1, 1, 5))
    assert u2 == (3, 3, 2)
    assert v2 == (0, 1, 4)


def test_condense_pair_preserves_column_sums():
    u, v = (2, 3, 1), (1, 1, 5)
    u2, v2 = condense_pair(u, v)
    for i in range(3):
        assert u[i] + v[i] == u2[i] + v2[i]


def test_condense_pair_fixpoint_on_tight_rows():
    assert condense_pair((5, 1, 2), (0, 4, 0)) == ((5, 1, 2), (0, 4, 0))


def test_condense_down_fixture(f2, f2_array):
    assert condense_down(f2_array) == serialize.decode(f2["expected"]["down"])


def test_condense_down_is_idempotent(f1_array, f2_array):
    assert condense_down(f1_array) == f1_array
    d = condense_down(f2_array)
    assert condense_down(d) == d
    assert is_d_tight(d)


def test_shape_fixtures(f1, f1_array, f2, f2_array):
    assert list(shape(f1_array)) == f1["expected"]["shape"]
    assert list(shape(condense_down(f2_array))) == f2["expected"]["shape"]


def test_shape_condenses_first():
    assert shape(Array([[0, 1], [1, 0]])) == (2, 0)


def test_directional_condensations_are_conjugates(f2_array):
    a = f2_array
    assert condense_up(a) == central_reverse(condense_down(central_reverse(a)))
    assert condense_left(a) == transpose(condense_down(transpose(a)))
    assert condense_right(a) == central_reverse(condense_left(central_reverse(a)))
    assert is_l_tight(condense_left(a))


def test_condense_preserves_margins(f2_array):
    a = f2_array
    assert row_sums(condense_left(a)) == row_sums(a)
    assert condense_down(a).total() == a.total()


def test_condense_handles_fractions():
    a = Array([[0, Fraction(1, 2)], [Fraction(3, 2), 0]])
    d = condense_down(a)
    assert is_d_tight(d)
    assert d.total() == 2


def test_random_schedule_reaches_same_fixpoint(f2_array):
    rng = random.Random(7)
    want = condense_down(f2_array)
    for _ in range(5):
        assert condense_down(f2_array, rng=rng) == want


def test_schutzenberger_is_an_involution_on_d_tight(f1_array, f2_array):
    for a in [f1_array, condense_down(f2_array)]:
        s = schutzenberger(a)
        assert is_d_tight(s)
        assert schutzenberger(s) == a
