"""Randomized verification suites.

Each suite draws reproducible random instances from a seed, checks one of
the package's global identities, and returns a small report.  The CLI
``verify`` command and the acceptance tests both run these.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arrays import (
    Array,
    col_sums,
    concat,
    diag,
    is_d_tight,
    row_sums,
    split,
)
from .bijections import (
    associate,
    associate_functional,
    com_prime,
    commute,
    rho2_prime,
)
from .condense import condense_down, condense_left, condense_pair
from .scalars import trim
from .hives import (
    AntiStandardPair,
    StandardPair,
    TriangleFunction,
    increments,
    is_discrete_concave,
    pair_to_hive,
)
from .lr import verify_associativity, verify_commutativity, lr_coefficient
from .octahedron import (
    TETRA_FRAME,
    is_polarized_dc,
    rsk,
    rsk_inverse,
    tetra_propagate,
    tetra_shadow_wall,
    tetra_slope_wall,
)


@dataclass
class CheckReport:
    name: str
    cases: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "ok" if self.passed else f"{len(self.failures)} failure(s)"
        out = f"{self.name}: {self.cases} case(s), {state}"
        for f in self.failures[:10]:
            out += f"\n  - {f}"
        return out


# -- random instance builders --------------------------------------------------


def random_array(rng, n, m, max_mass=6, max_denom=1) -> Array:
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if max_denom > 1:
                q = rng.randint(1, max_denom)
                row.append(Fraction(rng.randint(0, max_mass * q), q))
            else:
                row.append(rng.randint(0, max_mass))
        rows.append(row)
    return Array(rows)


def random_standard_pair(rng, n, max_mass=3) -> StandardPair:
    b = condense_left(random_array(rng, n, n, max_mass))
    c = condense_left(random_array(rng, n, n, max_mass))
    x, y = split(condense_down(concat(b, c)), n)
    return StandardPair(x, y)


def random_antistandard_pair(rng, n, max_mass=3) -> AntiStandardPair:
    from .bijections import to_antistandard

    return to_antistandard(random_standard_pair(rng, n, max_mass))


def random_couple(rng, n, max_mass=3):
    """A compatible couple of standard pairs (shared intermediate shape)."""
    parts = [condense_left(random_array(rng, n, n, max_mass)) for _ in range(3)]
    full = condense_down(concat(concat(parts[0], parts[1]), parts[2]))
    a, rest = split(full, n)
    b, c = split(rest, n)
    p1 = StandardPair(a, b)
    sigma = row_sums(p1.concat())
    p2 = StandardPair(diag(sigma), c)
    return p1, p2


def random_hive(rng, n, max_mass=3) -> TriangleFunction:
    return pair_to_hive(random_standard_pair(rng, n, max_mass))


# -- suites ---------------------------------------------------------------------


def check_theorem2(cases=300, seed=0, max_n=5, max_m=5, max_mass=6, max_denom=4):
    """One propagation yields both condensations at once."""
    rng = random.Random(seed)
    rep = CheckReport("thm2 (propagation = both condensations)", cases)
    for k in range(cases):
        a = random_array(
            rng, rng.randint(1, max_n), rng.randint(1, max_m), max_mass, max_denom
        )
        d, l = rsk(a)
        if d != condense_down(a):
            rep.failures.append(f"case {k}: ceiling != down-condensation of {a}")
        if l != condense_left(a):
            rep.failures.append(f"case {k}: wall != left-condensation of {a}")
    return rep


def check_rsk_bijection(cases=300, inv_cases=100, seed=0, max_n=5, max_m=5,
                        max_mass=6, max_denom=4):
    """The two condensations determine the array, both ways round."""
    rng = random.Random(seed)
    rep = CheckReport("rsk bijection (round trips)", cases + inv_cases)
    for k in range(cases):
        a = random_array(
            rng, rng.randint(1, max_n), rng.randint(1, max_m), max_mass, max_denom
        )
        d, l = rsk(a)
        if rsk_inverse(d, l) != a:
            rep.failures.append(f"case {k}: inverse(rsk) != id on {a}")
    for k in range(inv_cases):
        a = random_array(
            rng, rng.randint(1, max_n), rng.randint(1, max_m), max_mass, max_denom
        )
        d, l = rsk(a)
        d2, l2 = rsk(rsk_inverse(d, l))
        if (d2, l2) != (d, l):
            rep.failures.append(f"inv case {k}: rsk(inverse) != id on {(d, l)}")
    return rep


def check_shapes(cases=500, seed=0, max_n=5, max_m=5, max_mass=6, max_denom=3,
                 schedules=True):
    """Down and left condensations sort the same shape, and the fixpoint does
    not depend on the order in which row pairs are condensed."""
    rng = random.Random(seed)
    rep = CheckReport("shapes (well-defined, schedule-independent)", cases)
    for k in range(cases):
        a = random_array(
            rng, rng.randint(1, max_n), rng.randint(1, max_m), max_mass, max_denom
        )
        d = condense_down(a)
        l = condense_left(a)
        rs, cs = trim(row_sums(d)), trim(col_sums(l))
        if rs != cs:
            rep.failures.append(f"case {k}: shapes differ for {a}: {rs} vs {cs}")
        if not schedules:
            continue
        # schedule 2: ascending sweeps
        rows = [list(r) for r in a.rows]
        for _ in range(len(rows) + 1):
            for j in range(len(rows) - 1):
                u, v = condense_pair(rows[j], rows[j + 1])
                rows[j], rows[j + 1] = list(u), list(v)
            if is_d_tight(Array(rows)):
                break
        if Array(rows) != d:
            rep.failures.append(f"case {k}: ascending schedule disagrees on {a}")
        # schedule 3: random violating pair
        if condense_down(a, rng=rng) != d:
            rep.failures.append(f"case {k}: random schedule disagrees on {a}")
    return rep


def check_involution(cases=200, seed=0, max_n=4, max_mass=3):
    """Commutation is an involution swapping the first two type entries."""
    rng = random.Random(seed)
    rep = CheckReport("involution (commuter)", cases)
    for k in range(cases):
        p = random_antistandard_pair(rng, rng.randint(1, max_n), max_mass)
        q = commute(p)
        lam, mu, nu = p.type()
        if q.type() != (mu, lam, nu):
            rep.failures.append(f"case {k}: type not swapped for {p}")
        if commute(q) != p:
            rep.failures.append(f"case {k}: not an involution on {p}")
    return rep


def check_theorem1(cases=100, seed=0, max_n=5, max_mass=3):
    """Propagation from concave ground and front wall is polarized concave,
    and the two remaining walls are concave."""
    rng = random.Random(seed)
    rep = CheckReport("thm1 (tetrahedron propagation)", cases)
    for k in range(cases):
        n = rng.randint(1, max_n)
        f, g = (pair_to_hive(p) for p in random_couple(rng, n, max_mass))
        T = tetra_propagate(
            lambda x, y: g.value(y, n - x),
            lambda x, z: f.value(n - x - z, n - x),
            n,
        )
        if not is_polarized_dc(T, TETRA_FRAME):
            rep.failures.append(f"case {k}: propagation not polarized concave")
        if not is_discrete_concave(tetra_shadow_wall(T)):
            rep.failures.append(f"case {k}: shadow wall not concave")
        if not is_discrete_concave(tetra_slope_wall(T)):
            rep.failures.append(f"case {k}: slope wall not concave")
    return rep


def check_theorem3(cases=50, seed=0, n=2, max_mass=3):
    """The functional associator computes the hives of the rearranged pairs."""
    rng = random.Random(seed)
    rep = CheckReport("thm3 (functional associator)", cases)
    for k in range(cases):
        p1, p2 = random_couple(rng, n, max_mass)
        o1, o2 = associate(p1, p2)
        got = associate_functional(pair_to_hive(p1), pair_to_hive(p2))
        want = (pair_to_hive(o1), pair_to_hive(o2))
        if got != want:
            rep.failures.append(f"case {k}: functional associator differs on "
                                f"{(p1, p2)}")
    return rep


def check_theorem4(cases=100, seed=0, max_n=3, max_mass=3):
    """The two-dimensional route to the functional commuter agrees with the
    propagation route."""
    rng = random.Random(seed)
    rep = CheckReport("thm4 (functional commuter, 2d route)", cases)
    for k in range(cases):
        h = random_hive(rng, rng.randint(1, max_n), max_mass)
        if rho2_prime(h) != com_prime(h):
            rep.failures.append(f"case {k}: routes differ on {h}")
    return rep


def _partitions2(maxtotal):
    out = []
    for a in range(maxtotal + 1):
        for b in range(a + 1):
            if a + b <= maxtotal:
                out.append((a, b))
    return out


def check_commut_count(maxtotal=4):
    """Exhaustive two-row types: commutation is a bijection of pair sets and
    the coefficient is symmetric in the first two arguments."""
    rep = CheckReport("commut-count (exhaustive, two rows)", 0)
    for nu in _partitions2(maxtotal):
        for lam in _partitions2(sum(nu)):
            for mu in _partitions2(sum(nu)):
                if sum(lam) + sum(mu) != sum(nu):
                    continue
                rep.cases += 1
                r = verify_commutativity(lam, mu, nu)
                if not r.bijective:
                    rep.failures.append(f"not bijective at {(lam, mu, nu)}")
                c = lr_coefficient(lam, mu, nu)
                if c != lr_coefficient(mu, lam, nu) or c != r.left_count:
                    rep.failures.append(f"counts differ at {(lam, mu, nu)}")
    return rep


def check_assoc_count(maxtotal=4):
    """Exhaustive two-row types: both parenthesisations produce couple sets
    of equal size, matched by the rearrangement."""
    rep = CheckReport("assoc-count (exhaustive, two rows)", 0)
    for pi in _partitions2(maxtotal):
        total = sum(pi)
        for lam in _partitions2(total):
            for mu in _partitions2(total):
                for nu in _partitions2(total):
                    if sum(lam) + sum(mu) + sum(nu) != total:
                        continue
                    rep.cases += 1
                    r = verify_associativity(lam, mu, nu, pi, bound=total)
                    if not r.bijective:
                        rep.failures.append(
                            f"not bijective at {(lam, mu, nu, pi)}"
                        )
    return rep


SUITES = {
    "thm1": check_theorem1,
    "thm2": check_theorem2,
    "thm3": check_theorem3,
    "thm4": check_theorem4,
    "involution": check_involution,
    "shapes": check_shapes,
    "rsk-bijection": check_rsk_bijection,
    "assoc-count": check_assoc_count,
    "commut-count": check_commut_count,
}
