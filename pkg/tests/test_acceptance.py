"""Acceptance suite: one test per criterion, every comparison exact.

Each test prints its own pass line (visible with `pytest -s` or in the
CLI `twistcalc verify` equivalent); tolerances are zero throughout.
"""

import math
import time
from fractions import Fraction

from twistcalc import alexander, braidcore, lspace, twistfam
from twistcalc.laurent import MultiLaurent, exact_divide, normalize_units


def report(criterion, detail):
    print(f"PASS {criterion}: {detail}")


def torus_alexander(p, q):
    def factor(k):
        return MultiLaurent(1, {(k,): 1, (0,): -1})

    return normalize_units(exact_divide(factor(p * q) * factor(1), factor(p) * factor(q)))


def test_criterion_1_torres_pipeline():
    start = time.perf_counter()
    for m in range(1, 5):
        for n in range(1, 5):
            result = alexander.ribbon_family_alexander(m, n)
            assert result.poly == normalize_units(
                alexander.ribbon_family_closed_form(m, n)
            )
            assert result.span == 2 * (m * n + 1)
            assert abs(result.poly.evaluate_ones()) == 1
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"pipeline took {elapsed:.3f}s, budget 1s"
    report("criterion 1", f"Torres pipeline matches the closed form on [1,4]^2 in {elapsed:.3f}s")


def test_criterion_2_seifert_matrix_oracle():
    for k in range(1, 6):
        word = braidcore.BraidWord(2, (1,) * (2 * k + 1))
        matrix = braidcore.seifert_from_closure(word).matrix
        assert alexander.alexander_from_seifert(matrix) == torus_alexander(2, 2 * k + 1)
        sigma, g4_lower = alexander.signature_bound(matrix)
        assert sigma == -2 * k
        assert g4_lower == k == twistfam.torus_knot_genus(2, 2 * k + 1)
    report("criterion 2", "sigma_1^(2k+1) polynomials and signature bounds exact, k in [1,5]")


def test_criterion_3_triad_identity():
    start = time.perf_counter()
    checked = 0
    for p in range(1, 21):
        for q in range(1, 6):
            for omega in range(1, 7):
                r = lspace.Slope(p, q)
                limit = lspace.homology_order(
                    lspace.SurgerySpec(omega, r, lspace.Slope(0, 1))
                )
                for n in range(0, 13):
                    here = lspace.twist_filling_order(omega, r, n)
                    after = lspace.twist_filling_order(omega, r, n + 1)
                    assert after == here + limit
                    checked += 1
    propagated = lspace.triad_propagate(2, lspace.Slope(7), {0}, True, up_to=40)
    assert propagated == set(range(41))
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"triad grid took {elapsed:.3f}s, budget 5s"
    report("criterion 3", f"|H1| additivity exact at {checked} grid points in {elapsed:.3f}s")


def test_criterion_4_coherent_growth():
    for omega in range(2, 6):
        for q in range(1, 8):
            if math.gcd(omega, q) != 1:
                continue
            spec = twistfam.TwistFamilySpec(omega=omega, eta=omega)
            G = twistfam.torus_knot_genus(omega, q)
            samples = []
            for n in range(0, 11):
                genus = twistfam.torus_knot_genus(omega, q + n * omega)
                assert twistfam.genus_law(spec, G, n) == genus
                samples.append((n, genus))
            base = twistfam.TwistFamilySpec(
                omega=omega, eta=omega, g4_0=samples[0][1], s0=2 * samples[0][1]
            )
            stab = twistfam.coherent_stabilization(base, samples, G=G)
            assert stab.per_twist_increment == Fraction(omega * (omega - 1), 2)
            assert stab.violations == 0
    report("criterion 4", "genus law reproduces torus genera; increments exact, zero violations")


def test_criterion_5_limit_ratios():
    for omega in range(2, 7):
        spec = twistfam.TwistFamilySpec(omega=omega, eta=omega)
        assert twistfam.limit_ratio(spec) == 1
    assert twistfam.limit_ratio(twistfam.TwistFamilySpec(1, 3)) is twistfam.INFINITY
    assert twistfam.limit_ratio(
        twistfam.TwistFamilySpec(2, 4, norm_disk=3)
    ) == Fraction(3)
    targets = [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3), Fraction(5)]
    for r in targets:
        assert twistfam.ratio_realizers(r, twistfam.WINDING_POSITIVE).ratio() == r
    assert (
        twistfam.ratio_realizers(twistfam.INFINITY, twistfam.WINDING_POSITIVE).ratio()
        is twistfam.INFINITY
    )
    report("criterion 5", "ratio limits and realizer round-trips exact on {1, 3/2, 2, 7/3, 5, inf}")


def test_criterion_6_torus_link_invariants():
    t36 = twistfam.torus_link_invariants(3, 2)
    assert t36.s == 10 and t36.g4 == 4
    for omega in range(2, 6):
        for k in range(1, 7):
            inv = twistfam.torus_link_invariants(omega, k)
            assert inv.s == 2 * inv.fiber_genus + (omega - 1)
    report("criterion 6", "s(T(3,6)) = 10, g4(T(3,6)) = 4; s = 2*fiber + (omega-1) on the grid")


def test_criterion_7_cable_satellite():
    assert lspace.cable_lspace_criterion(2, 3, 1, True)
    assert not lspace.cable_lspace_criterion(2, 1, 1, True)
    both_one = lspace.satellite_check(lspace.SatelliteSpec(2, 1, 1))
    assert both_one.verdict == lspace.BOTH_ONE_CABLE23_TREFOIL
    assert both_one.g_PK == 3
    assert both_one.rational_longitude == lspace.Slope(4, 5)
    image = lspace.slope_image(
        lspace.lspace_slope_set(1), lspace.satellite_gluing_matrix()
    )
    assert image.interior_contains(lspace.Slope(4, 5))
    assert lspace.glue_cover_check(image, lspace.AllButLongitude(lspace.Slope(4, 5)))
    rejected = lspace.satellite_check(lspace.SatelliteSpec(2, 1, 2))
    assert not rejected.ineq1 and rejected.verdict == lspace.VIOLATED
    report("criterion 7", "(2,3)-cable accepted, longitude 4/5 covered; (2,1) and g_K = 2 rejected")


def test_criterion_8_garside_identities():
    import random

    for omega in range(2, 7):
        delta, full = braidcore.garside_elements(omega)
        assert braidcore.normal_form_equal(delta ** omega, full)
    rng = random.Random(11)
    for _ in range(1000):
        strands = rng.randint(2, 6)
        length = rng.randint(0, 12)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
        )
        word = braidcore.BraidWord(strands, letters)
        assert braidcore.normal_form_equal(
            word * word.inverse(), braidcore.BraidWord(strands)
        )
        if strands >= 3:
            i = rng.randint(1, strands - 2)
            with_left = word * braidcore.BraidWord(strands, (i, i + 1, i))
            with_right = word * braidcore.BraidWord(strands, (i + 1, i, i + 1))
            assert braidcore.normal_form_equal(with_left, with_right)
    report("criterion 8", "delta^omega = Delta^2 for omega in [2,6]; 1000 randomized identities")


def test_criterion_9_obstruction_arithmetic():
    for omega in range(3, 9):
        for b in range(1, omega - 1):
            for t0 in range(1, omega - 1):
                assert lspace.bridge_braid_obstruction(omega, b, t0, 1)
    for p in range(2, 7):
        for r in range(2, 7):
            for q in range(1, 8):
                if math.gcd(p, q) != 1:
                    continue
                for s in range(1, 8):
                    if math.gcd(r, s) != 1:
                        continue
                    assert lspace.cable_case_obstruction(p, q, r, s)
    minimum, excluded = lspace.essential_tangle_bound(2, 2)
    assert minimum == 8 and excluded == {1, 2, 3}
    report("criterion 9", "bridge-braid and cable-case obstructions hold; tangle bound excludes n <= 3")


def test_rule_engine_covers_headline_families():
    # the one-sided example family: L-space knots exactly for n >= 0
    verdicts = {
        v.verdict
        for v in twistfam.classify_rules(
            twistfam.Evidence(
                nontrivial_circle=True,
                infinitely_many_lspace_positive=True,
                no_negative_lspace_members=True,
            )
        )
    }
    assert verdicts >= {"coherent", "eventually-positive-lspace", "one-sided-family"}
    assert "braid-axis" not in verdicts
    report("rule engine", "one-sided family gets coherent + one-sided verdicts and no braid axis")
