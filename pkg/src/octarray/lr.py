"""Littlewood-Richardson numbers three ways: integer hives, integer standard
pairs, and a direct count of skew tableaux with Yamanouchi reading word.

The first two are tied together by the pair/hive correspondence and must
always agree; the tableau count is an independent oracle used by the tests.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .arrays import Array, concat, diag, is_d_tight, is_l_tight
from .errors import ValidationError
from .hives import (
    StandardPair,
    TriangleFunction,
    is_discrete_concave,
    rhombus_violations,
)
from .scalars import check_partition, partial_sums, trim


def _check_integer_partition(p, name):
    p = check_partition(p, name)
    if any(not isinstance(x, int) for x in p):
        raise ValidationError(f"{name} must be an integer partition")
    return p


def enumerate_hives(lam, mu, nu):
    """All integer hives with boundary increments (lam, mu, nu).

    The boundary is forced; interior points are filled one at a time in a
    fixed scan order, bounded below by supermodularity and above by the
    strip inequalities, with a full rhombus check on every completed hive.
    Returns a deterministically ordered list of TriangleFunctions.
    """
    lam = _check_integer_partition(lam, "lam")
    mu = _check_integer_partition(mu, "mu")
    nu = _check_integer_partition(nu, "nu")
    n = len(nu)
    if len(lam) != n or len(mu) != n:
        raise ValidationError("the three partitions must have equal length")
    if sum(lam) + sum(mu) != sum(nu):
        return []
    lam_s = partial_sums(lam)
    mu_s = partial_sums(mu)
    nu_s = partial_sums(nu)

    fixed = {}
    for v in range(n + 1):
        fixed[(0, v)] = lam_s[v]
    for u in range(n + 1):
        fixed[(u, n)] = lam_s[n] + mu_s[u]
    for k in range(n + 1):
        fixed[(k, k)] = nu_s[k]
    if fixed[(n, n)] != lam_s[n] + mu_s[n]:
        return []

    interior = [
        (u, v) for v in range(2, n) for u in range(1, v)
    ]
    results = []
    values = dict(fixed)

    def search(idx):
        if idx == len(interior):
            h = TriangleFunction(
                [[values[(u, v)] for u in range(v + 1)] for v in range(n + 1)]
            )
            if is_discrete_concave(h):
                results.append(h)
            return
        u, v = interior[idx]
        lo = values[(u - 1, v)] + values[(u, v - 1)] - values[(u - 1, v - 1)]
        hi = values[(u - 1, v - 1)] + values[(u, v - 1)] - values[(u - 1, v - 2)]
        if u >= 2:
            hi = min(
                hi,
                values[(u - 1, v - 1)] + values[(u - 1, v)] - values[(u - 2, v - 1)],
            )
        for x in range(lo, hi + 1):
            values[(u, v)] = x
            search(idx + 1)
        values.pop((u, v), None)

    search(0)
    results.sort(key=lambda h: h.values)
    return results


def enumerate_standard_pairs(lam, mu, nu):
    """All integer standard pairs of type (lam, mu, nu).

    The first component is the diagonal of lam; the second ranges over the
    integer arrays with column sums mu, row sums nu - lam and support on or
    above the diagonal, filtered by the two tightness conditions.
    """
    lam = _check_integer_partition(lam, "lam")
    mu = _check_integer_partition(mu, "mu")
    nu = _check_integer_partition(nu, "nu")
    n = len(nu)
    if len(lam) != n or len(mu) != n:
        raise ValidationError("the three partitions must have equal length")
    rsums = [nu[j] - lam[j] for j in range(n)]
    if any(r < 0 for r in rsums) or sum(mu) != sum(rsums):
        return []
    a = diag(lam)
    results = []
    rows = [[0] * n for _ in range(n)]
    col_left = list(mu)

    def fill(j, i, row_left):
        # row j (0-based, bottom to top), column i
        if i == n:
            if row_left != 0:
                return
            if j == n - 1:
                if any(col_left):
                    return
                b = Array([list(r) for r in rows])
                if is_l_tight(b) and is_d_tight(concat(a, b)):
                    results.append(StandardPair(a, b))
                return
            fill(j + 1, 0, rsums[j + 1])
            return
        if i > j:
            # no mass right of the diagonal in the second component
            fill(j, i + 1, row_left)
            return
        top = min(row_left, col_left[i])
        for x in range(top + 1):
            rows[j][i] = x
            col_left[i] -= x
            fill(j, i + 1, row_left - x)
            col_left[i] += x
            rows[j][i] = 0

    fill(0, 0, rsums[0])
    return results


@lru_cache(maxsize=None)
def _lr_cached(lam, mu, nu):
    hives = enumerate_hives(lam, mu, nu)
    pairs = enumerate_standard_pairs(lam, mu, nu)
    if len(hives) != len(pairs):
        raise AssertionError(
            f"hive count {len(hives)} != pair count {len(pairs)} "
            f"for {(lam, mu, nu)}"
        )
    return len(hives)


def _pad_common(*parts):
    """Validate partitions and pad them with zeros to a common length."""
    parts = [_check_integer_partition(p, f"argument {k}")
             for k, p in enumerate(parts)]
    n = max(max(len(p) for p in parts), 1)
    return tuple(tuple(p) + (0,) * (n - len(p)) for p in parts)


def lr_coefficient(lam, mu, nu) -> int:
    """The number of integer hives of the given type, cross-checked against
    the number of integer standard pairs."""
    return _lr_cached(*_pad_common(lam, mu, nu))


def lr_oracle(lam, mu, nu) -> int:
    """Independent count: skew semistandard fillings of nu minus lam with
    weight mu whose reading word is Yamanouchi.  Backtracking over boxes,
    no hives or arrays involved."""
    lam = _check_integer_partition(lam, "lam")
    mu = _check_integer_partition(mu, "mu")
    nu = _check_integer_partition(nu, "nu")
    n = max(len(lam), len(mu), len(nu), 1)
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    nu = tuple(nu) + (0,) * (n - len(nu))
    if any(lam[j] > nu[j] for j in range(n)):
        return 0
    if sum(lam) + sum(mu) != sum(nu):
        return 0

    # boxes listed in reading order: rows bottom to top, right to left,
    # so the Yamanouchi condition can be enforced incrementally.
    boxes = []
    for j in range(n):
        for c in range(nu[j], lam[j], -1):
            boxes.append((c, j))
    grid = {}
    left = list(mu)
    counts = [0] * (n + 1)
    total = 0

    def fill(idx):
        nonlocal total
        if idx == len(boxes):
            total += 1
            return
        c, j = boxes[idx]
        right = grid.get((c + 1, j))
        below = grid.get((c, j - 1))
        hi = right if right is not None else n
        for x in range(1, hi + 1):
            if left[x - 1] == 0:
                continue
            if below is not None and x <= below:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            grid[(c, j)] = x
            left[x - 1] -= 1
            counts[x] += 1
            fill(idx + 1)
            counts[x] -= 1
            left[x - 1] += 1
            del grid[(c, j)]

    fill(0)
    return total


# -- bijection reports ---------------------------------------------------------


@dataclass
class BijectionReport:
    name: str
    left_count: int
    right_count: int
    failures: list = field(default_factory=list)

    @property
    def bijective(self) -> bool:
        return self.left_count == self.right_count and not self.failures


def verify_commutativity(lam, mu, nu) -> BijectionReport:
    """Materialise both standard-pair sets and check that commutation is a
    type-swapping involution between them."""
    from .bijections import commute_sp  # local import to avoid a cycle

    lam, mu, nu = _pad_common(lam, mu, nu)
    fwd = enumerate_standard_pairs(lam, mu, nu)
    bwd = enumerate_standard_pairs(mu, lam, nu)
    bwd_set = set(bwd)
    failures = []
    seen = set()
    for p in fwd:
        q = commute_sp(p)
        if q not in bwd_set:
            failures.append(f"image of {p} not in target set")
        if q in seen:
            failures.append(f"collision at {q}")
        seen.add(q)
        if commute_sp(q) != p:
            failures.append(f"not an involution at {p}")
    return BijectionReport("commutativity", len(fwd), len(bwd), failures)


def _partitions(total, parts, maxpart):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, maxpart), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def verify_associativity(lam, mu, nu, pi, bound) -> BijectionReport:
    """Materialise both couple sets (the intermediate shape runs over all
    partitions up to the given largest part) and check the rearrangement is
    a bijection."""
    from .bijections import associate, associate_inverse  # avoid a cycle

    lam, mu, nu, pi = _pad_common(lam, mu, nu, pi)
    n = len(pi)
    left = []
    for sigma in _partitions(sum(lam) + sum(mu), n, bound):
        for p1 in enumerate_standard_pairs(lam, mu, sigma):
            for p2 in enumerate_standard_pairs(sigma, nu, pi):
                left.append((p1, p2))
    right = []
    for tau in _partitions(sum(mu) + sum(nu), n, bound):
        for q1 in enumerate_standard_pairs(mu, nu, tau):
            for q2 in enumerate_standard_pairs(lam, tau, pi):
                right.append((q1, q2))
    right_set = set(right)
    failures = []
    seen = set()
    for couple in left:
        image = associate(*couple)
        if image not in right_set:
            failures.append(f"image of {couple} not in target set")
        if image in seen:
            failures.append(f"collision at {image}")
        seen.add(image)
        if associate_inverse(*image) != couple:
            failures.append(f"inverse fails at {couple}")
    return BijectionReport("associativity", len(left), len(right), failures)


__all__ = [
    "enumerate_hives",
    "enumerate_standard_pairs",
    "lr_coefficient",
    "lr_oracle",
    "BijectionReport",
    "verify_commutativity",
    "verify_associativity",
]
