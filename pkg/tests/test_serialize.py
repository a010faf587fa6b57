from fractions import Fraction

import pytest

from octarray import Array, TriangleFunction, ValidationError
from octarray import serialize
from octarray.hives import StandardPair
from octarray.arrays import diag


def test_array_round_trip_with_fractions():
    a = Array([[Fraction(1, 2), 2], [0, Fraction(7, 3)]])
    doc = serialize.encode_array(a)
    assert doc["rows"][0][0] == "1/2"
    assert serialize.decode(doc) == a


def test_triangle_round_trip(f4_triangle):
    doc = serialize.encode_triangle(f4_triangle)
    assert serialize.decode(doc) == f4_triangle


def test_pair_round_trip():
    p = StandardPair(diag((2, 1)), Array([[1, 0], [1, 1]]))
    doc = serialize.encode_pair(p)
    assert doc["kind"] == "standard"
    assert serialize.decode(doc) == p


def test_decode_rejects_inconsistent_sizes():
    with pytest.raises(ValidationError):
        serialize.decode_array({"type": "array", "n": 5, "rows": [[1, 2]]})


def test_decode_missing_type():
    with pytest.raises(KeyError):
        serialize.decode({"rows": [[1]]})
