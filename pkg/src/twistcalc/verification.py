"""Desk-scale verification suite: every acceptance identity as a named check.

Each check raises AssertionError on the first failing identity and
returns a one-line detail string on success.  Randomized checks use a
fixed seed so two runs produce identical output.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from . import alexander, braidcore, lspace, twistfam
from .laurent import MultiLaurent, exact_divide, normalize_units


@dataclass(frozen=True)
class Check:
    tag: str
    name: str
    run: Callable[[], str]


def _torus_alexander(p: int, q: int) -> MultiLaurent:
    def cyclotomic_like(k: int) -> MultiLaurent:
        return MultiLaurent(1, {(k,): 1, (0,): -1})

    numerator = cyclotomic_like(p * q) * cyclotomic_like(1)
    denominator = cyclotomic_like(p) * cyclotomic_like(q)
    return normalize_units(exact_divide(numerator, denominator))


def check_torres_pipeline() -> str:
    for m in range(1, 5):
        for n in range(1, 5):
            result = alexander.ribbon_family_alexander(m, n)
            expected = normalize_units(alexander.ribbon_family_closed_form(m, n))
            assert result.poly == expected, f"pipeline ({m},{n}) != closed form"
            assert result.span == 2 * (m * n + 1), f"span off at ({m},{n})"
            assert result.genus_lower_bound == m * n + 1
            assert abs(result.poly.evaluate_ones()) == 1, f"value at 1 off at ({m},{n})"
    return "pipeline == closed form on [1,4]^2; span = 2(mn+1); value at 1 = +-1"


def check_seifert_oracle() -> str:
    for k in range(1, 6):
        word = braidcore.BraidWord(2, (1,) * (2 * k + 1))
        data = braidcore.seifert_from_closure(word)
        poly = alexander.alexander_from_seifert(data.matrix)
        assert poly == _torus_alexander(2, 2 * k + 1), f"alexander off at k={k}"
        sigma, g4_lower = alexander.signature_bound(data.matrix)
        assert sigma == -2 * k, f"signature {sigma} != {-2 * k}"
        assert g4_lower == k == twistfam.torus_knot_genus(2, 2 * k + 1)
        assert data.knot_genus() == k
    return "sigma_1^(2k+1): alexander = (t^(2k+1)+1)/(t+1) and g4 bound = k, k in [1,5]"


def check_triad_additivity() -> str:
    count = 0
    for omega in range(1, 7):
        for p in range(1, 21):
            for q in range(1, 6):
                if math.gcd(p, q) != 1:
                    continue
                r = lspace.Slope(p, q)
                limit = lspace.homology_order(
                    lspace.SurgerySpec(omega, r, lspace.Slope(0, 1))
                )
                previous = lspace.twist_filling_order(omega, r, 0)
                assert previous == p
                for n in range(0, 13):
                    following = lspace.twist_filling_order(omega, r, n + 1)
                    assert following == previous + limit, (
                        f"additivity failed at omega={omega}, r={r}, n={n}"
                    )
                    previous = following
                count += 1
    propagated = lspace.triad_propagate(2, lspace.Slope(7), {0}, True, up_to=30)
    assert propagated == set(range(31)), "propagation from {0} missed a twist"
    return f"|H1| additivity exact on {count} coprime slopes x 13 steps; propagation fills n >= 0"


def check_coherent_growth() -> str:
    families = 0
    for omega in range(2, 6):
        for q in range(1, 8):
            if math.gcd(omega, q) != 1:
                continue
            spec = twistfam.TwistFamilySpec(omega=omega, eta=omega)
            G = twistfam.torus_knot_genus(omega, q)
            samples = []
            for n in range(0, 11):
                expected = twistfam.torus_knot_genus(omega, q + n * omega)
                assert twistfam.genus_law(spec, G, n) == expected, (
                    f"genus law off at omega={omega}, q={q}, n={n}"
                )
                samples.append((n, expected))  # torus knots: g4 = g
            spec_with_base = twistfam.TwistFamilySpec(
                omega=omega, eta=omega, g4_0=samples[0][1], s0=2 * samples[0][1]
            )
            report = twistfam.coherent_stabilization(spec_with_base, samples, G=G)
            assert report.per_twist_increment == Fraction(omega * (omega - 1), 2)
            assert report.violations == 0
            assert report.C_plus == 0
            families += 1
    return f"torus-axis growth exact for {families} families, zero increment violations"


def check_limit_ratios() -> str:
    for omega in range(2, 7):
        assert twistfam.limit_ratio(
            twistfam.TwistFamilySpec(omega=omega, eta=omega)
        ) == 1
    assert twistfam.limit_ratio(twistfam.TwistFamilySpec(1, 3)) is twistfam.INFINITY
    assert twistfam.limit_ratio(
        twistfam.TwistFamilySpec(2, 4, norm_disk=3)
    ) == Fraction(3)
    targets = [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3), Fraction(5)]
    for r in targets:
        realizer = twistfam.ratio_realizers(r, twistfam.WINDING_POSITIVE)
        assert realizer.ratio() == r, f"round-trip failed at {r}"
        zero = twistfam.ratio_realizers(r, twistfam.WINDING_ZERO)
        assert zero.ratio() == r, f"winding-zero round-trip failed at {r}"
    inf_real = twistfam.ratio_realizers(twistfam.INFINITY, twistfam.WINDING_POSITIVE)
    assert inf_real.ratio() is twistfam.INFINITY
    return "coherent -> 1, (1,3) -> infinity, x/(omega-1) otherwise; realizers round-trip"


def check_torus_link_invariants() -> str:
    t36 = twistfam.torus_link_invariants(3, 2)
    assert t36.s == 10, f"s(T(3,6)) = {t36.s}"
    assert t36.g4 == 4, f"g4(T(3,6)) = {t36.g4}"
    for omega in range(2, 6):
        for k in range(1, 7):
            inv = twistfam.torus_link_invariants(omega, k)
            assert inv.s == 2 * inv.fiber_genus + (omega - 1), (
                f"s vs fiber genus inconsistent at ({omega},{k})"
            )
    return "s(T(3,6)) = 10, g4(T(3,6)) = 4; s = 2*fiber + (omega-1) on the grid"


def check_cable_satellite() -> str:
    assert lspace.cable_lspace_criterion(2, 3, 1, True)
    assert not lspace.cable_lspace_criterion(2, 1, 1, True)
    assert not lspace.cable_lspace_criterion(2, 3, 1, False)
    report = lspace.satellite_check(lspace.SatelliteSpec(2, 1, 1))
    assert report.ineq1
    assert report.verdict == lspace.BOTH_ONE_CABLE23_TREFOIL
    assert report.g_PK == 3
    assert report.rational_longitude == lspace.Slope(4, 5)
    assert report.cover_check
    rejected = lspace.satellite_check(lspace.SatelliteSpec(2, 1, 2))
    assert not rejected.ineq1 and rejected.verdict == lspace.VIOLATED
    return "(2,3)-cable over genus 1 accepted with longitude 4/5 covered; (2,1) and g_K=2 rejected"


def check_garside_identities() -> str:
    for omega in range(2, 7):
        delta, full_twist = braidcore.garside_elements(omega)
        assert braidcore.normal_form_equal(delta ** omega, full_twist), (
            f"delta^{omega} != full twist"
        )
    rng = random.Random(20250809)
    identity_checks = 0
    for _ in range(1000):
        strands = rng.randint(2, 6)
        length = rng.randint(0, 14)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
        )
        word = braidcore.BraidWord(strands, letters)
        trivial = braidcore.BraidWord(strands)
        assert braidcore.normal_form_equal(word * word.inverse(), trivial)
        if strands >= 3:
            i = rng.randint(1, strands - 2)
            left = braidcore.BraidWord(strands, (i, i + 1, i))
            right = braidcore.BraidWord(strands, (i + 1, i, i + 1))
            assert braidcore.normal_form_equal(word * left, word * right)
        if strands >= 4:
            i = rng.randint(1, strands - 3)
            j = rng.randint(i + 2, strands - 1)
            near = braidcore.BraidWord(strands, (i, j))
            far = braidcore.BraidWord(strands, (j, i))
            assert braidcore.normal_form_equal(word * near, word * far)
        shuffled = braidcore.twist_family_word(word, 1)
        assert shuffled.exponent_sum() == word.exponent_sum() + strands * (strands - 1)
        identity_checks += 1
    return f"delta^omega = Delta^2 for omega in [2,6]; {identity_checks} randomized word identities"


def check_obstructions() -> str:
    bridge_cases = 0
    for omega in range(3, 9):
        for b in range(1, omega - 1):
            for t0 in range(1, omega - 1):
                for wraps in range(0, 3):
                    assert lspace.bridge_braid_obstruction(
                        omega, b, t0 + wraps * omega, 1
                    )
                    bridge_cases += 1
    cable_cases = 0
    for p in range(2, 7):
        for r in range(2, 7):
            for q in range(1, 10):
                if math.gcd(p, q) != 1:
                    continue
                for s in range(1, 10):
                    if math.gcd(r, s) != 1:
                        continue
                    assert lspace.cable_case_obstruction(p, q, r, s)
                    cable_cases += 1
    minimum, excluded = lspace.essential_tangle_bound(2, 2)
    assert minimum == 8
    assert excluded == {1, 2, 3}
    return f"{bridge_cases} bridge-braid and {cable_cases} cable-case obstructions hold; tangle bound 8 excludes n <= 3"


def check_rule_engine() -> str:
    one_sided = twistfam.Evidence(
        nontrivial_circle=True,
        infinitely_many_lspace_positive=True,
        no_negative_lspace_members=True,
    )
    verdicts = {v.verdict for v in twistfam.classify_rules(one_sided)}
    assert "coherent" in verdicts
    assert "one-sided-family" in verdicts
    assert "braid-axis" not in verdicts
    both_ends = twistfam.Evidence(
        nontrivial_circle=True,
        tight_fibered_all_large_positive=True,
        mirror_tight_fibered_all_large=True,
    )
    assert any(
        v.verdict == "braid-axis" for v in twistfam.classify_rules(both_ends)
    )
    wind_zero = twistfam.Evidence(omega=0, bounded_genus_gap=True)
    verdicts = {v.verdict for v in twistfam.classify_rules(wind_zero)}
    assert "wind-zero-or-coherent" in verdicts and "coherent" not in verdicts
    return "one-sided family verdicts carry no braid axis; both mirror ends do"


CHECKS: List[Check] = [
    Check("torres", "torres-pipeline-closed-form", check_torres_pipeline),
    Check("seifert", "seifert-matrix-alexander-signature", check_seifert_oracle),
    Check("triad", "homology-order-additivity", check_triad_additivity),
    Check("growth", "coherent-genus-growth", check_coherent_growth),
    Check("ratios", "limit-ratio-values-and-realizers", check_limit_ratios),
    Check("toruslink", "torus-link-invariants", check_torus_link_invariants),
    Check("cable", "cable-satellite-criteria", check_cable_satellite),
    Check("garside", "garside-normal-form-identities", check_garside_identities),
    Check("obstructions", "divisibility-obstructions", check_obstructions),
    Check("rules", "family-rule-engine", check_rule_engine),
]


def run_suite(tag_filter: Optional[str] = None) -> Tuple[List[Tuple[Check, bool, str]], bool]:
    """Run (a filtered subset of) the suite; returns per-check results and
    overall success."""
    results = []
    all_ok = True
    for check in CHECKS:
        if tag_filter and check.tag != tag_filter:
            continue
        try:
            detail = check.run()
            results.append((check, True, detail))
        except AssertionError as exc:
            results.append((check, False, str(exc) or "assertion failed"))
            all_ok = False
    return results, all_ok
