"""Triangular grids, rhombus inequalities and the pair/hive correspondence.

A TriangleFunction lives on the points (u, v) with 0 <= u <= v <= n.  Its
boundary increments are read along the left side (u = 0), the top side
(v = n) and the diagonal (u = v).

Rhombus inequalities are checked on any point set triangulated by the edge
directions (1,0), (0,1) and (1,1): each pair of adjacent primitive triangles
gives one inequality, "sum over the shared edge >= sum over the opposite
vertices".  The three resulting patterns are

    (i)   f(i,j)   + f(i+1,j+1) >= f(i+1,j) + f(i,j+1)
    (ii)  f(i,j+1) + f(i+1,j+1) >= f(i,j)   + f(i+1,j+2)
    (iii) f(i+1,j) + f(i+1,j+1) >= f(i,j)   + f(i+2,j+1)

Type (i) alone is supermodularity; (i)+(ii) is concavity along vertical
strips, (i)+(iii) along horizontal strips, and all three together is
discrete concavity.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .arrays import (
    Array,
    CornerFunction,
    concat,
    diag,
    integrate,
    is_d_tight,
    is_l_tight,
    is_r_tight,
)
from .condense import shape
from .errors import ValidationError
from .scalars import Scalar, normalize


@dataclass(frozen=True)
class TriangleFunction:
    """Values h(u, v) on 0 <= u <= v <= n, stored as rows indexed by v."""

    values: tuple  # values[v][u], len(values[v]) == v + 1

    def __init__(self, values):
        values = tuple(tuple(normalize(x) for x in row) for row in values)
        if not values or len(values[0]) != 1:
            raise ValidationError("triangle rows must start with a single apex value")
        for v, row in enumerate(values):
            if len(row) != v + 1:
                raise ValidationError(f"triangle row {v} has {len(row)} entries")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def value(self, u: int, v: int) -> Scalar:
        if not (0 <= u <= v <= self.n):
            raise ValidationError(f"point ({u},{v}) outside triangle of size {self.n}")
        return self.values[v][u]

    def points(self) -> dict:
        return {
            (u, v): self.values[v][u]
            for v in range(self.n + 1)
            for u in range(v + 1)
        }


def triangle_from_points(n: int, pts) -> TriangleFunction:
    return TriangleFunction(
        [[pts[(u, v)] for u in range(v + 1)] for v in range(n + 1)]
    )


# -- rhombus machinery --------------------------------------------------------

_PATTERNS = {
    "i": (((0, 0), (1, 1)), ((1, 0), (0, 1))),
    "ii": (((0, 1), (1, 1)), ((0, 0), (1, 2))),
    "iii": (((1, 0), (1, 1)), ((0, 0), (2, 1))),
}


def _as_points(f):
    if isinstance(f, dict):
        return f
    return f.points()


def rhombus_violations(f, kinds=("i", "ii", "iii")):
    """All violated rhombus inequalities in the point set of f.

    Returns a list of (kind, (i, j)) naming the base point of each violated
    rhombus.  f may be a CornerFunction, a TriangleFunction or a dict.
    """
    pts = _as_points(f)
    out = []
    for (i, j) in pts:
        for kind in kinds:
            (hi1, hi2), (lo1, lo2) = _PATTERNS[kind]
            corners = [
                (i + d[0], j + d[1]) for d in (hi1, hi2, lo1, lo2)
            ]
            if all(c in pts for c in corners):
                a, b, c, d = (pts[c] for c in corners)
                if a + b < c + d:
                    out.append((kind, (i, j)))
    return out


def is_supermodular(f) -> bool:
    return not rhombus_violations(f, kinds=("i",))


def is_vs_concave(f) -> bool:
    return not rhombus_violations(f, kinds=("i", "ii"))


def is_hs_concave(f) -> bool:
    return not rhombus_violations(f, kinds=("i", "iii"))


def is_discrete_concave(f) -> bool:
    return not rhombus_violations(f)


# -- boundary increments ------------------------------------------------------


class HiveType(NamedTuple):
    lam: tuple
    mu: tuple
    nu: tuple


def increments(h: TriangleFunction) -> HiveType:
    """Boundary increments (left side, top side, diagonal) of a triangle."""
    n = h.n
    lam = tuple(h.value(0, v) - h.value(0, v - 1) for v in range(1, n + 1))
    mu = tuple(h.value(u, n) - h.value(u - 1, n) for u in range(1, n + 1))
    nu = tuple(h.value(k, k) - h.value(k - 1, k - 1) for k in range(1, n + 1))
    return HiveType(lam, mu, nu)


# -- standard and anti-standard pairs -----------------------------------------


@dataclass(frozen=True)
class StandardPair:
    """A pair of square arrays, both condensed left, whose concatenation is
    tight downwards.  The first component is then forced to be diagonal."""

    a: Array
    b: Array

    def __post_init__(self):
        _check_pair_sizes(self.a, self.b)
        if not is_l_tight(self.a):
            raise ValidationError("first component is not condensed left")
        if not is_l_tight(self.b):
            raise ValidationError("second component is not condensed left")
        if not is_d_tight(concat(self.a, self.b)):
            raise ValidationError("concatenation is not tight downwards")

    @property
    def n(self) -> int:
        return self.a.n

    def concat(self) -> Array:
        return concat(self.a, self.b)

    def type(self) -> HiveType:
        lam = shape(self.a)
        mu = shape(self.b)
        nu = shape(self.concat())
        return HiveType(lam, mu, nu)


@dataclass(frozen=True)
class AntiStandardPair:
    """First component condensed right, second condensed left, concatenation
    tight downwards."""

    a: Array
    b: Array

    def __post_init__(self):
        _check_pair_sizes(self.a, self.b)
        if not is_r_tight(self.a):
            raise ValidationError("first component is not condensed right")
        if not is_l_tight(self.b):
            raise ValidationError("second component is not condensed left")
        if not is_d_tight(concat(self.a, self.b)):
            raise ValidationError("concatenation is not tight downwards")

    @property
    def n(self) -> int:
        return self.a.n

    def concat(self) -> Array:
        return concat(self.a, self.b)

    def type(self) -> HiveType:
        lam = shape(self.a)
        mu = shape(self.b)
        nu = shape(self.concat())
        return HiveType(lam, mu, nu)


def _check_pair_sizes(a: Array, b: Array):
    if a.n != a.m or b.n != b.m or a.n != b.n:
        raise ValidationError(
            f"pair components must be square and equal-sized, "
            f"got {a.n}x{a.m} and {b.n}x{b.m}"
        )


# -- the pair <-> hive correspondence -----------------------------------------


def pair_to_hive(p: StandardPair) -> TriangleFunction:
    """h(u, v) = integral of the concatenation over columns <= n+u, rows <= v."""
    f = integrate(p.concat())
    n = p.n
    return TriangleFunction(
        [[f.value(n + u, v) for u in range(v + 1)] for v in range(n + 1)]
    )


def _hive_ext(h: TriangleFunction, u: int, v: int) -> Scalar:
    """Extend below the diagonal: constant along rows there."""
    return h.value(min(u, v), v)


def hive_to_pair(h: TriangleFunction) -> StandardPair:
    """Inverse of pair_to_hive; raises if h is not a hive of a pair."""
    n = h.n
    lam, _, _ = increments(h)
    rows = []
    for v in range(1, n + 1):
        row = []
        for u in range(1, n + 1):
            x = (
                _hive_ext(h, u, v)
                - _hive_ext(h, u - 1, v)
                - _hive_ext(h, u, v - 1)
                + _hive_ext(h, u - 1, v - 1)
            )
            if x < 0:
                raise ValidationError(
                    f"negative mixed difference {x} at ({u},{v}); not a pair hive"
                )
            row.append(x)
        rows.append(row)
    b = Array(rows)
    return StandardPair(diag(lam), b)


def hive_corner_function(h: TriangleFunction) -> CornerFunction:
    """The 2n x n corner function whose right half restricts to h."""
    p = hive_to_pair(h)
    return integrate(p.concat())


__all__ = [
    "TriangleFunction",
    "triangle_from_points",
    "rhombus_violations",
    "is_supermodular",
    "is_vs_concave",
    "is_hs_concave",
    "is_discrete_concave",
    "HiveType",
    "increments",
    "StandardPair",
    "AntiStandardPair",
    "pair_to_hive",
    "hive_to_pair",
    "hive_corner_function",
]
