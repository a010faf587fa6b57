"""Tableaux, commutation and association of pairs, and their functional forms.

Integer arrays that are tight downwards are exactly semistandard Young
tableaux in French convention: row j of the tableau contains the letter i
with multiplicity a(i, j), rows are indexed bottom to top, and columns
increase strictly upwards.

The commuter acts on anti-standard pairs by condensing the centrally
reversed concatenation; on standard pairs it is conjugated by the
standard/anti-standard change of tightness.  The associator rearranges a
compatible couple of standard pairs through the common triple.  Both have
functional counterparts acting on triangle functions via three-dimensional
propagation; those are implemented here as well.
"""

from dataclasses import dataclass

from .arrays import (
    Array,
    central_reverse,
    concat,
    diag,
    integrate,
    is_d_tight,
    row_sums,
    split,
    transpose,
)
from .condense import (
    condense_down,
    condense_left,
    condense_right,
    schutzenberger,
    shape,
)
from .errors import ValidationError
from .hives import (
    AntiStandardPair,
    StandardPair,
    TriangleFunction,
    hive_to_pair,
    increments,
    pair_to_hive,
)
from .octahedron import prism_propagate, prism_top, rsk_inverse, tetra_propagate
from .scalars import check_partition, is_integral, partial_sums, trim


# -- semistandard tableaux ----------------------------------------------------


@dataclass(frozen=True)
class SSYT:
    """Rows bottom to top; row lengths weakly decrease upwards, rows weakly
    increase left to right, columns increase strictly upwards."""

    rows: tuple

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        for r, row in enumerate(rows):
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise ValidationError(f"row {r + 1} is not weakly increasing")
            if r + 1 < len(rows) and len(rows[r + 1]) > len(row):
                raise ValidationError("row lengths must weakly decrease upwards")
            if r + 1 < len(rows):
                above = rows[r + 1]
                if any(above[i] <= row[i] for i in range(len(above))):
                    raise ValidationError("columns must increase strictly upwards")
        object.__setattr__(self, "rows", rows)


def dtight_to_ssyt(a: Array) -> SSYT:
    """The tableau whose row j holds the letter i with multiplicity a(i, j)."""
    if not is_d_tight(a):
        raise ValidationError("array is not tight downwards")
    rows = []
    for row in a.rows:
        if any(not is_integral(x) for x in row):
            raise ValidationError("tableau multiplicities must be integers")
        letters = []
        for i, mult in enumerate(row, start=1):
            letters.extend([i] * int(mult))
        rows.append(letters)
    while rows and not rows[-1]:
        rows.pop()
    return SSYT(rows)


def ssyt_to_dtight(t: SSYT, n: int = None, m: int = None) -> Array:
    rows = t.rows
    if n is None:
        n = max((x for row in rows for x in row), default=1)
    if m is None:
        m = max(len(rows), 1)
    if len(rows) > m:
        raise ValidationError("tableau has more rows than requested")
    out = []
    for j in range(m):
        row = [0] * n
        for x in rows[j] if j < len(rows) else ():
            if x > n:
                raise ValidationError(f"letter {x} exceeds alphabet size {n}")
            row[x - 1] += 1
        out.append(row)
    a = Array(out)
    if not is_d_tight(a):
        raise ValidationError("tableau does not encode a tight array")
    return a


def render_ssyt(t: SSYT) -> str:
    """Plain-text picture, top (shortest) row first."""
    return "\n".join(" ".join(str(x) for x in row) for row in t.rows[::-1])


# -- Yamanouchi words and skew tableaux ---------------------------------------


def is_yamanouchi(word) -> bool:
    """True iff at every prefix each letter i occurs at least as often as
    i + 1.  Words are sequences of integers >= 1."""
    counts = {}
    for x in word:
        x = int(x)
        if x < 1:
            raise ValidationError(f"letter {x} out of range")
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


@dataclass(frozen=True)
class LRSkewTableau:
    """A skew tableau of shape outer minus inner (French, rows bottom to
    top), semistandard, whose reading word (rows right to left, top row
    last) is Yamanouchi."""

    outer: tuple
    inner: tuple
    rows: tuple

    def __init__(self, outer, inner, rows):
        outer = check_partition(outer, "outer shape")
        inner = tuple(check_partition(inner, "inner shape"))
        inner = inner + (0,) * (len(outer) - len(inner))
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if len(rows) != len(outer):
            raise ValidationError("one filling row per shape row required")
        if any(i > o for i, o in zip(inner, outer)):
            raise ValidationError("inner shape not contained in outer")
        grid = {}
        for j, row in enumerate(rows, start=1):
            if len(row) != outer[j - 1] - inner[j - 1]:
                raise ValidationError(f"row {j} has the wrong number of boxes")
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise ValidationError(f"row {j} is not weakly increasing")
            for k, x in enumerate(row):
                grid[(inner[j - 1] + 1 + k, j)] = x
        for (c, j), x in grid.items():
            if (c, j + 1) in grid and grid[(c, j + 1)] <= x:
                raise ValidationError(f"column {c} does not increase strictly")
        word = reading_word_rows(rows)
        if not is_yamanouchi(word):
            raise ValidationError("reading word is not Yamanouchi")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)

    def reading_word(self):
        return reading_word_rows(self.rows)

    def weight(self) -> tuple:
        counts = {}
        for row in self.rows:
            for x in row:
                counts[x] = counts.get(x, 0) + 1
        top = max(counts, default=0)
        return tuple(counts.get(i, 0) for i in range(1, top + 1))


def reading_word_rows(rows) -> tuple:
    """Rows right to left, bottom row first (top row last)."""
    out = []
    for row in rows:
        out.extend(reversed(row))
    return tuple(out)


def render_skew(t: LRSkewTableau) -> str:
    lines = []
    for j in range(len(t.outer) - 1, -1, -1):
        cells = ["."] * t.inner[j] + [str(x) for x in t.rows[j]]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def pair_to_lr_tableau(p: StandardPair) -> LRSkewTableau:
    """The skew tableau of a standard integer pair: strip the diagonal part
    (the letters of the first block fill the inner shape in Yamanouchi
    fashion) and keep the second block's letters, shifted down by n."""
    lam = shape(p.a)
    outer = row_sums(p.concat())
    rows = []
    for row in p.b.rows:
        if any(not is_integral(x) for x in row):
            raise ValidationError("pair is not integral")
        letters = []
        for i, mult in enumerate(row, start=1):
            letters.extend([i] * int(mult))
        rows.append(letters)
    return LRSkewTableau(outer, lam, rows)


def lr_tableau_to_pair(t: LRSkewTableau) -> StandardPair:
    n = len(t.outer)
    rows = []
    for j in range(n):
        row = [0] * n
        for x in t.rows[j] if j < len(t.rows) else ():
            if x > n:
                raise ValidationError(f"letter {x} exceeds alphabet size {n}")
            row[x - 1] += 1
        rows.append(row)
    lam = t.inner + (0,) * (n - len(t.inner))
    return StandardPair(diag(lam), Array(rows))


# -- changing tightness of the first component ---------------------------------


def to_antistandard(p: StandardPair) -> AntiStandardPair:
    return AntiStandardPair(condense_right(p.a), p.b)


def to_standard(p: AntiStandardPair) -> StandardPair:
    return StandardPair(condense_left(p.a), p.b)


# -- the commuter --------------------------------------------------------------


def commute(p: AntiStandardPair) -> AntiStandardPair:
    """Condense the centrally reversed concatenation; swaps the two outer
    types and is an involution."""
    full = schutzenberger(p.concat())
    b2, a2 = split(full, p.n)
    return AntiStandardPair(b2, a2)


def commute_sp(p: StandardPair) -> StandardPair:
    return to_standard(commute(to_antistandard(p)))


def rho1(p: StandardPair) -> StandardPair:
    """Triple application of the reversal-condensation: to the first block,
    to the whole concatenation, then to the first block of the result."""
    n = p.n
    a1 = schutzenberger(p.a)
    whole = schutzenberger(concat(a1, p.b))
    w1, w2 = split(whole, n)
    return StandardPair(schutzenberger(w1), w2)


# -- the associator -------------------------------------------------------------


def associate(p1: StandardPair, p2: StandardPair):
    """Rearrange a compatible couple ((a,b), (s,c)) -- final shape of the
    first pair equal to starting shape of the second -- into the couple
    (down-split of b|c, (a, left-condensation of b|c))."""
    if p1.n != p2.n:
        raise ValidationError("pair sizes differ")
    n = p1.n
    sigma = trim(row_sums(p1.concat()))
    if trim(shape(p2.a)) != sigma:
        raise ValidationError(
            "couple is not compatible: intermediate shapes disagree"
        )
    bc = concat(p1.b, p2.b)
    down = condense_down(bc)
    b2, c2 = split(down, n)
    out1 = StandardPair(b2, c2)
    left = condense_left(bc)
    lt, rest = split(left, n)
    if any(x != 0 for row in rest.rows for x in row):
        raise AssertionError("left condensation spilled past n columns")
    out2 = StandardPair(p1.a, lt)
    return out1, out2


def _zeros(n: int, m: int) -> Array:
    return Array([[0] * n for _ in range(m)])


def associate_inverse(out1: StandardPair, out2: StandardPair):
    """Inverse rearrangement, through reverse propagation."""
    if out1.n != out2.n:
        raise ValidationError("pair sizes differ")
    n = out1.n
    tau = trim(row_sums(out1.concat()))
    if trim(shape(out2.b)) != tau:
        raise ValidationError(
            "couple is not compatible: intermediate shapes disagree"
        )
    d = out1.concat()
    l = concat(out2.b, _zeros(n, n))
    bc = rsk_inverse(d, l)
    b, c = split(bc, n)
    p1 = StandardPair(out2.a, b)
    sigma = row_sums(p1.concat())
    p2 = StandardPair(diag(sigma), c)
    return p1, p2


def associate_functional(f: TriangleFunction, g: TriangleFunction):
    """The associator on triangle functions, by one propagation through the
    tetrahedron.

    f sits on the front wall via (x, 0, z) -> f(n-x-z, n-x), g on the ground
    via (x, y, 0) -> g(y, n-x); both maps carry the triangulations of the
    walls onto the hive grid, and the shared increments meet along the edge
    y = z = 0.  The shadow wall then carries the first output hive and the
    slope wall the second.
    """
    n = f.n
    if g.n != n:
        raise ValidationError("triangle sizes differ")
    if increments(f).nu != increments(g).lam:
        raise ValidationError("hives are not compatible along the shared edge")
    T = tetra_propagate(
        lambda x, y: g.value(y, n - x),
        lambda x, z: f.value(n - x - z, n - x),
        n,
    )
    base = T.value(0, 0, n)
    p = TriangleFunction(
        [[T.value(0, u, n - v) - base for u in range(v + 1)] for v in range(n + 1)]
    )
    q = TriangleFunction(
        [[T.value(n - v, u, v - u) for u in range(v + 1)] for v in range(n + 1)]
    )
    return p, q


# -- the functional commuter ----------------------------------------------------


def _com_prism(f: TriangleFunction):
    p = hive_to_pair(f)
    lam = increments(f).lam
    a_right = condense_right(diag(lam))
    rev = central_reverse(concat(a_right, p.b))
    return prism_propagate(rev)


def com_prime(f: TriangleFunction) -> TriangleFunction:
    """The commuter on hives: propagate the reversed concatenation through
    the doubled prism and read the ceiling on the right-hand triangle."""
    n = f.n
    F = _com_prism(f)
    top = prism_top(F)
    out = TriangleFunction(
        [[top.value(n + u, v) for u in range(v + 1)] for v in range(n + 1)]
    )
    lam, mu, nu = increments(f)
    got = increments(out)
    if got != (mu, lam, nu):
        raise AssertionError(f"commuted hive has increments {got}")
    return out


def hk_wall_h(f: TriangleFunction) -> TriangleFunction:
    """The auxiliary wall function: the inner wall of the same propagation,
    renormalised by the reversed diagonal increments.  Its increments are
    (-reversed(nu), mu, -reversed(lam)), and rotating it by
    h(i, j) = result(n-j, n-j+i) recovers com_prime(f)."""
    n = f.n
    F = _com_prism(f)
    nu = increments(f).nu
    nuop_sums = partial_sums(nu[::-1])
    total = sum(nu)
    return TriangleFunction(
        [
            [F.value(n, i, j) - nuop_sums[j] + total for i in range(j + 1)]
            for j in range(n + 1)
        ]
    )


def rho2_prime(f: TriangleFunction) -> TriangleFunction:
    """Two-dimensional route to the functional commuter: condense the
    reversed transpose of the second component, integrate, renormalise and
    rotate.  Agrees with com_prime."""
    n = f.n
    b = hive_to_pair(f).b
    lstar = transpose(schutzenberger(transpose(b)))
    fl = integrate(lstar)
    nu = increments(f).nu
    nuop_sums = partial_sums(nu[::-1])
    total = sum(nu)

    def h(i, j):
        return fl.value(i, j) - nuop_sums[j] + total

    return TriangleFunction(
        [[h(v - u, n - u) for u in range(v + 1)] for v in range(n + 1)]
    )


__all__ = [
    "SSYT",
    "dtight_to_ssyt",
    "ssyt_to_dtight",
    "render_ssyt",
    "is_yamanouchi",
    "LRSkewTableau",
    "reading_word_rows",
    "render_skew",
    "pair_to_lr_tableau",
    "lr_tableau_to_pair",
    "to_antistandard",
    "to_standard",
    "commute",
    "commute_sp",
    "rho1",
    "associate",
    "associate_inverse",
    "associate_functional",
    "com_prime",
    "hk_wall_h",
    "rho2_prime",
]
