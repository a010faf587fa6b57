"""Acceptance gate: every global guarantee of the package, checked with
exact arithmetic (no tolerances) and frozen expected values."""

from octarray import (
    commute,
    com_prime,
    condense_down,
    condense_left,
    dtight_to_ssyt,
    hk_wall_h,
    lr_coefficient,
    lr_oracle,
    prism_propagate,
    prism_top,
    prism_wall,
    rho2_prime,
    transpose,
)
from octarray import checks, serialize


# 1. The prism propagation reproduces the recorded worked example in full:
#    top face, wall integrals, spot values, and the nine pictured fill-in
#    values (the recorded display lists eight of them, omitting one
#    duplicated 3).
def test_criterion_01_prism_worked_example(f2, f2_array):
    F = prism_propagate(f2_array)
    top = prism_top(F)
    assert [list(r) for r in top.values] == [[0] * 4] + f2["expected"]["top_rows"]
    w = prism_wall(F)
    for j, k, v in f2["expected"]["wall_points"]:
        assert w.value(j, k) == v
    for x, y, z, v in f2["expected"]["spot_values"]:
        assert F.value(x, y, z) == v
    pictured = sorted(
        F.value(x, y, z) for x in (1, 2, 3) for (y, z) in ((1, 1), (1, 2), (2, 2))
    )
    assert pictured == sorted([3, 7, 6, 8, 13, 5, 6, 2] + [3])


# 2. One three-dimensional propagation yields both condensations at once,
#    on 300 random arrays with sides up to 5 and denominators up to 4.
def test_criterion_02_propagation_equals_condensations():
    report = checks.check_theorem2(cases=300, seed=0, max_n=5, max_m=5,
                                   max_mass=6, max_denom=4)
    assert report.passed, report.summary()


# 3. The tableau displays of the worked examples are reproduced letter for
#    letter (down-condensation directly, left-condensation via transpose).
def test_criterion_03_ssyt_displays(f1, f1_array, f2, f2_array):
    assert [list(r) for r in dtight_to_ssyt(f1_array).rows] == \
        f1["expected"]["ssyt_rows"]
    assert [list(r) for r in dtight_to_ssyt(condense_down(f2_array)).rows] == \
        f2["expected"]["down_ssyt_rows"]
    assert [list(r) for r in
            dtight_to_ssyt(transpose(condense_left(f2_array))).rows] == \
        f2["expected"]["left_wall_ssyt_rows"]


# 4. The commuter sends the recorded anti-standard pair to its recorded
#    image and is a type-swapping involution on 200 random pairs (n <= 4).
def test_criterion_04_commuter(f3, f3_pair):
    q = commute(f3_pair)
    assert q == serialize.decode(f3["expected"]["commute"])
    assert commute(q) == f3_pair
    report = checks.check_involution(cases=200, seed=0, max_n=4)
    assert report.passed, report.summary()


# 5. The functional commuter reproduces the recorded output triangle and
#    wall function, and the rotation identity holds at all 10 points.
def test_criterion_05_functional_commuter(f4, f4_triangle):
    c = com_prime(f4_triangle)
    assert c == serialize.decode(f4["expected"]["com_prime"])
    h = hk_wall_h(f4_triangle)
    assert h == serialize.decode(f4["expected"]["h_wall"])
    n = f4_triangle.n
    count = 0
    for v in range(n + 1):
        for u in range(v + 1):
            assert h.value(u, v) == c.value(n - v, n - v + u)
            count += 1
    assert count == 10


# 6. Down- and left-condensation sort the same shape, independent of the
#    order row pairs are condensed in, on 500 random arrays.
def test_criterion_06_shape_well_defined():
    report = checks.check_shapes(cases=500, seed=0)
    assert report.passed, report.summary()


# 7. Propagating concave ground and front-wall data through the tetrahedron
#    gives a polarized concave function with concave walls, on 100 random
#    integer instances with n <= 5.
def test_criterion_07_tetra_concavity():
    report = checks.check_theorem1(cases=100, seed=0, max_n=5)
    assert report.passed, report.summary()


# 8. The propagation is reversible: the two condensations determine the
#    array, both directions of the round trip checked on random instances.
def test_criterion_08_rsk_round_trips():
    report = checks.check_rsk_bijection(cases=300, inv_cases=100, seed=0)
    assert report.passed, report.summary()


# 9. Littlewood-Richardson coefficients computed by hive counting agree
#    with the independent skew-tableau count for every type with three
#    rows, parts at most 4 and total at most 8; the pinned value
#    c((2,1,0),(2,1,0),(3,2,1)) = 2 is among them.
def test_criterion_09_lr_sweep():
    assert lr_coefficient((2, 1, 0), (2, 1, 0), (3, 2, 1)) == 2

    def partitions3(total):
        for a in range(min(total, 4), -1, -1):
            for b in range(min(a, total - a), -1, -1):
                c = total - a - b
                if 0 <= c <= b:
                    yield (a, b, c)

    triples = 0
    for total in range(0, 9):
        for nu in partitions3(total):
            for k in range(total + 1):
                for lam in partitions3(k):
                    for mu in partitions3(total - k):
                        triples += 1
                        assert lr_coefficient(lam, mu, nu) == \
                            lr_oracle(lam, mu, nu), (lam, mu, nu)
    assert triples > 900


# 10. The functional associator computes the hives of the rearranged
#     couple, on 50 random compatible couples (n = 2, masses <= 3).
def test_criterion_10_functional_associator():
    report = checks.check_theorem3(cases=50, seed=0, n=2, max_mass=3)
    assert report.passed, report.summary()


# 11. The two-dimensional route to the functional commuter agrees with the
#     propagation route, on the recorded triangle and 100 random hives
#     (n <= 3).
def test_criterion_11_functional_commuter_routes(f4_triangle):
    assert rho2_prime(f4_triangle) == com_prime(f4_triangle)
    report = checks.check_theorem4(cases=100, seed=0, max_n=3)
    assert report.passed, report.summary()


# 12. Counting identities: the commuter and associator are bijections of
#     the full enumerated sets for every two-row type with total at most 4,
#     so the corresponding sums of products of coefficients agree.
def test_criterion_12_counting_identities():
    report = checks.check_commut_count(maxtotal=4)
    assert report.passed, report.summary()
    report = checks.check_assoc_count(maxtotal=4)
    assert report.passed, report.summary()
