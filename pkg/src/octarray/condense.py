"""Condensation operators: moving mass down, left, right or up until tight.

The two-row kernel condense_pair is the workhorse.  Given rows (u, v) (u
below v) it moves as much mass from v down to u as the tightness condition
allows, preserving all column sums.  With cumulative sums U, V and
beta_k = V(k) - U(k-1), the new bottom integral is

    u'(1) + ... + u'(i) = U(i) + max_{k <= i} beta_k,

and v' absorbs whatever is left in each column.
"""

from .arrays import Array, central_reverse, is_d_tight, row_sums, transpose
from .errors import ValidationError
from .scalars import partial_sums


def condense_pair(u, v):
    """Fully condense the two-row array with bottom row u and top row v.

    Returns (u', v') with the same column sums, u' + v' = u + v columnwise,
    and the two-row result tight.
    """
    u = tuple(u)
    v = tuple(v)
    if len(u) != len(v):
        raise ValidationError("rows of different length")
    n = len(u)
    U = partial_sums(u)
    V = partial_sums(v)
    best = V[1] - U[0]
    f_prev = 0
    u_new = []
    v_new = []
    for i in range(1, n + 1):
        beta = V[i] - U[i - 1]
        if beta > best:
            best = beta
        f_cur = U[i] + best
        ui = f_cur - f_prev
        vi = u[i - 1] + v[i - 1] - ui
        if ui < 0 or vi < 0:
            raise AssertionError("condense_pair produced a negative mass")
        u_new.append(ui)
        v_new.append(vi)
        f_prev = f_cur
    return tuple(u_new), tuple(v_new)


def condense_down(a: Array, rng=None) -> Array:
    """Move mass downwards until the array is tight (the unique fixpoint).

    The default schedule sweeps adjacent row pairs from the top pair down and
    repeats; at most m sweeps are needed.  If ``rng`` is given, violating
    pairs are instead condensed in random order until none remain -- the
    fixpoint is the same, which the test-suite exercises.
    """
    rows = [list(r) for r in a.rows]
    m = len(rows)

    def pair_tight(j):
        return is_d_tight(Array([rows[j], rows[j + 1]]))

    def do_pair(j):
        u, v = condense_pair(rows[j], rows[j + 1])
        rows[j] = list(u)
        rows[j + 1] = list(v)

    if rng is None:
        for _ in range(max(m, 1)):
            for j in range(m - 2, -1, -1):
                do_pair(j)
            if is_d_tight(Array(rows)):
                return Array(rows)
        if not is_d_tight(Array(rows)):
            raise AssertionError("condensation did not converge within m sweeps")
        return Array(rows)

    guard = 0
    while True:
        bad = [j for j in range(m - 1) if not pair_tight(j)]
        if not bad:
            return Array(rows)
        do_pair(rng.choice(bad))
        guard += 1
        if guard > 1000 * m * m + 1000:
            raise AssertionError("randomized condensation schedule did not converge")


def condense_left(a: Array) -> Array:
    return transpose(condense_down(transpose(a)))


def condense_right(a: Array) -> Array:
    return central_reverse(condense_left(central_reverse(a)))


def condense_up(a: Array) -> Array:
    return central_reverse(condense_down(central_reverse(a)))


def shape(a: Array) -> tuple:
    """Row sums after condensing down; a weakly decreasing tuple."""
    s = row_sums(condense_down(a))
    if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
        raise AssertionError(f"shape is not weakly decreasing: {s}")
    return s


def schutzenberger(a: Array) -> Array:
    """Condense the centrally reversed array down."""
    return condense_down(central_reverse(a))


__all__ = [
    "condense_pair",
    "condense_down",
    "condense_left",
    "condense_right",
    "condense_up",
    "shape",
    "schutzenberger",
]
