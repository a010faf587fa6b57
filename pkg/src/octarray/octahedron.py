"""Octahedron-recurrence propagation in three dimensions.

Two settings are implemented.

The prism {0 <= x <= n, 0 <= y <= z <= m} propagates along (1, 0, 1): given
the double integral of an array on the slope face y = z and zeros on the
faces x = 0 and y = 0, the recurrence

    F(x,y,z) = max(F(x-1,y,z) + F(x,y,z-1),
                   F(x,y+1,z) + F(x-1,y-1,z-1)) - F(x-1,y,z-1)

fills everything else.  The ceiling z = m then carries the integral of the
down-condensation and the wall x = n the integral of the left-condensation,
which gives a second, independent route to both condensations.

The tetrahedron {x, y, z >= 0, x + y + z <= n} propagates along (-1, 1, 1)
from its ground z = 0 and front wall y = 0:

    F(a,b,c) = max(F(a,b,c-1) + F(a+1,b-1,c),
                   F(a,b-1,c) + F(a+1,b,c-1)) - F(a+1,b-1,c-1).

Both recurrences are instances of one octahedron rule: on every primitive
octahedron the sum over the main diagonal equals the larger of the sums over
the other two diagonals.  When one of those diagonals leaves the domain the
degenerate rule f(1) = f(b) + f(b') - f(0) with the remaining in-plane
diagonal applies.
"""

from dataclasses import dataclass
from math import gcd

from .arrays import (
    Array,
    CornerFunction,
    integrate,
    is_d_tight,
    is_l_tight,
    mixed_derivative,
)
from .errors import ValidationError
from .hives import TriangleFunction
from .scalars import Scalar, normalize


def or_step(f0: Scalar, fa: Scalar, fa2: Scalar, fb: Scalar, fb2: Scalar) -> Scalar:
    """One octahedron step: max of the two side-diagonal sums minus f0."""
    return max(fa + fa2, fb + fb2) - f0


# -- frames -------------------------------------------------------------------


@dataclass(frozen=True)
class OctahedronFrame:
    """A primitive octahedron up to translation: the main diagonal vector,
    the two side-diagonal vertex pairs (each pair summing to the main
    vector), and the normals of the four modular flat families."""

    main: tuple
    pairs: tuple
    flat_normals: tuple


PRISM_FRAME = OctahedronFrame(
    main=(1, 0, 1),
    pairs=((((1, 0, 0)), (0, 0, 1)), ((1, 1, 1), (0, -1, 0))),
    flat_normals=((1, 0, 0), (0, 0, 1), (1, -1, 0), (0, -1, 1)),
)

TETRA_FRAME = OctahedronFrame(
    main=(-1, 1, 1),
    pairs=(((-1, 1, 0), (0, 0, 1)), ((-1, 0, 1), (0, 1, 0))),
    flat_normals=((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)),
)


def _add(p, d):
    return (p[0] + d[0], p[1] + d[1], p[2] + d[2])


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _primitive(v):
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    return tuple(x // g for x in v)


def _flat_directions(frame: OctahedronFrame):
    """For each modular flat family: directions (da, db, dc) lying in the
    flat, cut out by the other three families, oriented so dc = da + db."""
    out = []
    for normal in frame.flat_normals:
        dirs = [
            _primitive(_cross(normal, other))
            for other in frame.flat_normals
            if other != normal
        ]
        oriented = None
        for sa in (1, -1):
            for sb in (1, -1):
                for (ia, ib, ic) in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
                    da = tuple(sa * x for x in dirs[ia])
                    db = tuple(sb * x for x in dirs[ib])
                    dc = tuple(da[k] + db[k] for k in range(3))
                    if dc == dirs[ic] or dc == tuple(-x for x in dirs[ic]):
                        oriented = (da, db, dc)
                        break
                if oriented:
                    break
            if oriented:
                break
        if oriented is None:
            raise AssertionError("flat directions do not close up")
        out.append(oriented)
    return out


# -- solids -------------------------------------------------------------------


@dataclass(frozen=True)
class Solid:
    """A function on a finite set of lattice points in 3-space."""

    values: dict

    def value(self, x: int, y: int, z: int) -> Scalar:
        return self.values[(x, y, z)]

    def points(self) -> dict:
        return self.values


def is_polarized(f: Solid, frame: OctahedronFrame) -> bool:
    """True iff every primitive octahedron of the frame that fits inside the
    domain satisfies: main-diagonal sum = max of the side-diagonal sums."""
    pts = f.values
    (a1, a2), (b1, b2) = frame.pairs
    for p in pts:
        corners = (
            _add(p, frame.main),
            _add(p, a1),
            _add(p, a2),
            _add(p, b1),
            _add(p, b2),
        )
        if all(c in pts for c in corners):
            top, fa, fa2, fb, fb2 = (pts[c] for c in corners)
            if pts[p] + top != max(fa + fa2, fb + fb2):
                return False
    return True


def is_polarized_dc(f: Solid, frame: OctahedronFrame) -> bool:
    """Polarized, and rhombus-concave inside every modular flat.

    Each modular flat is triangulated by its intersections with the other
    three flat families; every pair of adjacent primitive triangles gives a
    rhombus inequality (shared edge >= opposite vertices).
    """
    if not is_polarized(f, frame):
        return False
    pts = f.values
    for (da, db, dc) in _flat_directions(frame):
        for p in pts:
            # diagonal dc drawn: shared edge (p, p+dc)
            q = (_add(p, dc), _add(p, da), _add(p, db))
            if all(c in pts for c in q):
                if pts[p] + pts[q[0]] < pts[q[1]] + pts[q[2]]:
                    return False
            # rhombus spanned by (db, dc), drawn diagonal parallel to da
            q = (_add(p, db), _add(p, dc), _add(_add(p, db), dc))
            if all(c in pts for c in q):
                if pts[q[0]] + pts[q[1]] < pts[p] + pts[q[2]]:
                    return False
            # rhombus spanned by (da, dc), drawn diagonal parallel to db
            q = (_add(p, da), _add(p, dc), _add(_add(p, da), dc))
            if all(c in pts for c in q):
                if pts[q[0]] + pts[q[1]] < pts[p] + pts[q[2]]:
                    return False
    return True


# -- the prism ----------------------------------------------------------------


@dataclass(frozen=True)
class PrismFunction(Solid):
    n: int = 0
    m: int = 0


def _prism_points(n, m):
    return [
        (x, y, z)
        for z in range(m + 1)
        for y in range(z + 1)
        for x in range(n + 1)
    ]


def propagate_prism_faces(n: int, m: int, slope, front, shadow) -> PrismFunction:
    """Propagate arbitrary face data through the prism.

    slope(x, y) gives F on the face y = z, front(x, z) gives F on y = 0 and
    shadow(y, z) gives F on x = 0; the three must agree on shared edges.
    """
    F = {}
    for z in range(m + 1):
        for x in range(n + 1):
            F[(x, 0, z)] = normalize(front(x, z))
    for z in range(m + 1):
        for y in range(z + 1):
            F[(0, y, z)] = normalize(shadow(y, z))
    for y in range(m + 1):
        for x in range(n + 1):
            v = normalize(slope(x, y))
            key = (x, y, y)
            if key in F and F[key] != v:
                raise ValidationError(f"face data disagree at {key}")
            F[key] = v
    for z in range(1, m + 1):
        for y in range(z - 1, 0, -1):
            for x in range(1, n + 1):
                F[(x, y, z)] = or_step(
                    F[(x - 1, y, z - 1)],
                    F[(x - 1, y, z)],
                    F[(x, y, z - 1)],
                    F[(x, y + 1, z)],
                    F[(x - 1, y - 1, z - 1)],
                )
    return PrismFunction(values=F, n=n, m=m)


def prism_propagate(a: Array) -> PrismFunction:
    """Propagate the double integral of an array from the slope face."""
    f = integrate(a)
    return propagate_prism_faces(
        a.n,
        a.m,
        slope=f.value,
        front=lambda x, z: 0,
        shadow=lambda y, z: 0,
    )


def prism_top(F: PrismFunction) -> CornerFunction:
    """Restriction to the ceiling z = m."""
    return CornerFunction(
        [[F.value(x, y, F.m) for x in range(F.n + 1)] for y in range(F.m + 1)]
    )


def prism_wall(F: PrismFunction) -> TriangleFunction:
    """Restriction to the wall x = n, as a triangle in (y, z)."""
    return TriangleFunction(
        [[F.value(F.n, y, z) for y in range(z + 1)] for z in range(F.m + 1)]
    )


def _array_from_wall(w: TriangleFunction, n: int) -> Array:
    """Recover the left-condensed array from its wall integral.

    Below the diagonal the integral is constant along rows (a left-condensed
    array has no mass in box (i, j) with j < i), which extends the triangle
    to the full rectangle.
    """
    m = w.n

    def ext(j, k):
        return w.value(min(j, k), k)

    rows = []
    for k in range(1, m + 1):
        row = []
        for i in range(1, n + 1):
            row.append(ext(i, k) - ext(i - 1, k) - ext(i, k - 1) + ext(i - 1, k - 1))
        rows.append(row)
    return Array(rows)


def rsk(a: Array):
    """Both condensations of a in one propagation: returns (down, left).

    The ceiling of the prism integrates the down-condensation and the wall
    integrates the left-condensation.
    """
    F = prism_propagate(a)
    d = mixed_derivative(prism_top(F))
    l = _array_from_wall(prism_wall(F), a.n)
    return d, l


def rsk_inverse(d: Array, l: Array) -> Array:
    """Recover the unique array with the given condensations.

    d must be tight downwards, l tight leftwards, with equal shapes and the
    matching corner integrals on the shared edge.  Propagation runs backwards
    along (-1, 0, -1) from the ceiling and the wall; the recovered shadow
    face x = 0 must vanish, and the slope face must integrate a non-negative
    array -- both are checked.
    """
    if d.n != l.n or d.m != l.m:
        raise ValidationError("condensation sizes differ")
    if not is_d_tight(d):
        raise ValidationError("first argument is not tight downwards")
    if not is_l_tight(l):
        raise ValidationError("second argument is not tight leftwards")
    n, m = d.n, d.m
    fd = integrate(d)
    fl = integrate(l)
    # shared edge of ceiling and wall: mass in rows <= j of d must equal
    # mass in columns <= j of l for every j
    for j in range(m + 1):
        if fd.value(n, j) != fl.value(min(j, n), m):
            raise ValidationError("condensations disagree on the shared edge")

    F = {}
    for y in range(m + 1):
        for x in range(n + 1):
            F[(x, y, m)] = fd.value(x, y)
    for k in range(m + 1):
        for j in range(k + 1):
            key = (n, j, k)
            v = fl.value(min(j, n), k)
            if key in F and F[key] != v:
                raise ValidationError("ceiling and wall data disagree")
            F[key] = v
    for z in range(m + 1):
        for x in range(n + 1):
            F[(x, 0, z)] = 0
    for z in range(m, 0, -1):
        for x in range(n, 0, -1):
            for y in range(1, z):
                if (x - 1, y, z - 1) not in F:
                    F[(x - 1, y, z - 1)] = or_step(
                        F[(x, y, z)],
                        F[(x - 1, y, z)],
                        F[(x, y, z - 1)],
                        F[(x, y + 1, z)],
                        F[(x - 1, y - 1, z - 1)],
                    )
    for z in range(m + 1):
        for y in range(z + 1):
            if F[(0, y, z)] != 0:
                raise ValidationError(
                    "recovered shadow face is non-zero; the condensations are "
                    "not a matching pair"
                )
    slope = CornerFunction(
        [[F[(x, y, y)] for x in range(n + 1)] for y in range(m + 1)]
    )
    return mixed_derivative(slope)


# -- the tetrahedron ----------------------------------------------------------


@dataclass(frozen=True)
class TetraFunction(Solid):
    n: int = 0


def propagate_ground_frontwall(points, ground, frontwall) -> dict:
    """Propagate along (-1, 1, 1) through an arbitrary domain from the faces
    z = 0 and y = 0.  Points where one side diagonal leaves the domain use
    the degenerate in-plane rule."""
    pts = set(points)
    F = {}
    for (x, y, z) in pts:
        if z == 0:
            F[(x, y, z)] = normalize(ground(x, y))
        if y == 0:
            v = normalize(frontwall(x, z))
            if (x, y, z) in F and F[(x, y, z)] != v:
                raise ValidationError(f"ground and front wall disagree at x={x}")
            F[(x, y, z)] = v
    todo = sorted(
        (p for p in pts if p[1] >= 1 and p[2] >= 1),
        key=lambda p: (p[1] + p[2], p[1], p[0]),
    )
    for (a, b, c) in todo:
        f0 = F[(a + 1, b - 1, c - 1)]
        pair_a = ((a, b, c - 1), (a + 1, b - 1, c))
        pair_b = ((a, b - 1, c), (a + 1, b, c - 1))
        in_a = all(q in pts for q in pair_a)
        in_b = all(q in pts for q in pair_b)
        if in_a and in_b:
            F[(a, b, c)] = or_step(
                f0, F[pair_a[0]], F[pair_a[1]], F[pair_b[0]], F[pair_b[1]]
            )
        elif in_a:
            F[(a, b, c)] = F[pair_a[0]] + F[pair_a[1]] - f0
        elif in_b:
            F[(a, b, c)] = F[pair_b[0]] + F[pair_b[1]] - f0
        else:
            raise ValidationError("domain too thin for propagation")
    return F


def tetra_points(n: int):
    return [
        (x, y, z)
        for x in range(n + 1)
        for y in range(n + 1 - x)
        for z in range(n + 1 - x - y)
    ]


def tetra_propagate(ground, frontwall, n: int) -> TetraFunction:
    """Propagate through the tetrahedron x + y + z <= n from its ground
    (z = 0, a function of (x, y)) and front wall (y = 0, of (x, z))."""
    F = propagate_ground_frontwall(tetra_points(n), ground, frontwall)
    return TetraFunction(values=F, n=n)


def tetra_shadow_wall(F: TetraFunction) -> TriangleFunction:
    """Restriction to x = 0, as a triangle: value(u, v) = F(0, u, v - u)."""
    return TriangleFunction(
        [[F.value(0, u, v - u) for u in range(v + 1)] for v in range(F.n + 1)]
    )


def tetra_slope_wall(F: TetraFunction) -> TriangleFunction:
    """Restriction to x + y + z = n: value(u, v) = F(n - v, u, v - u)."""
    return TriangleFunction(
        [[F.value(F.n - v, u, v - u) for u in range(v + 1)] for v in range(F.n + 1)]
    )


__all__ = [
    "or_step",
    "OctahedronFrame",
    "PRISM_FRAME",
    "TETRA_FRAME",
    "Solid",
    "is_polarized",
    "is_polarized_dc",
    "PrismFunction",
    "propagate_prism_faces",
    "prism_propagate",
    "prism_top",
    "prism_wall",
    "rsk",
    "rsk_inverse",
    "TetraFunction",
    "propagate_ground_frontwall",
    "tetra_points",
    "tetra_propagate",
    "tetra_shadow_wall",
    "tetra_slope_wall",
]
