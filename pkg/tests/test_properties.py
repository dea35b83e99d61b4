"""Property tests: exact algebraic identities on randomized inputs."""

import dataclasses

from hypothesis import given, settings, strategies as st

from twistcalc import braidcore, twistfam
from twistcalc.alexander import alexander_from_seifert, integer_determinant
from twistcalc.braidcore import BraidWord, closure_info, normal_form, seifert_from_closure
from twistcalc.errors import EvidenceContradictionError
from twistcalc.laurent import (
    MonomialMap,
    MultiLaurent,
    exact_divide,
    format_poly,
    is_palindromic,
    normalize_units,
    parse_poly,
)
from twistcalc.lspace import (
    AllButLongitude,
    EmptySlopes,
    SingleSlope,
    Slope,
    SlopeInterval,
    slope_image,
)

exponents = st.tuples(
    st.integers(min_value=-4, max_value=4), st.integers(min_value=-4, max_value=4)
)
polys = st.builds(
    lambda terms: MultiLaurent(2, terms),
    st.dictionaries(exponents, st.integers(min_value=-9, max_value=9), max_size=6),
)
nonzero_polys = polys.filter(bool)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_substitute_is_multiplicative(a, b):
    mapping = MonomialMap([[1, 2], [0, -1]], 2)
    assert substituted(a * b, mapping) == substituted(a, mapping) * substituted(b, mapping)


def substituted(p, mapping):
    from twistcalc.laurent import substitute

    return substitute(p, mapping)


@given(nonzero_polys, nonzero_polys)
def test_exact_divide_round_trip(a, b):
    assert exact_divide(a * b, b) == a


@given(nonzero_polys, exponents, st.sampled_from([1, -1]))
def test_normalize_units_is_unit_invariant(p, shift, sign):
    unit = MultiLaurent.monomial(2, shift, sign)
    assert normalize_units(unit * p) == normalize_units(p)
    assert normalize_units(normalize_units(p)) == normalize_units(p)


@given(nonzero_polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), 2) == p


words = st.builds(
    lambda strands, signed: BraidWord(
        strands, tuple(s * (abs(i) % (strands - 1) + 1) for s, i in signed)
    ),
    st.integers(min_value=2, max_value=5),
    st.lists(
        st.tuples(st.sampled_from([1, -1]), st.integers(min_value=0, max_value=10)),
        max_size=10,
    ),
)


@given(words)
def test_word_times_inverse_is_trivial(word):
    assert braidcore.normal_form_equal(word * word.inverse(), BraidWord(word.strands))


@given(words)
def test_braid_text_round_trip(word):
    assert BraidWord.parse(word.format()) == word


@given(words, st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
def test_twist_family_word_is_additive(word, m, n):
    stacked = braidcore.twist_family_word(braidcore.twist_family_word(word, m), n)
    direct = braidcore.twist_family_word(word, m + n)
    assert braidcore.normal_form_equal(stacked, direct)


@given(words)
def test_exponent_sum_is_a_normal_form_invariant(word):
    # insert a free cancellation: the word changes, the element does not
    letter = 1
    padded = BraidWord(word.strands, word.letters + (letter, -letter))
    assert braidcore.normal_form_equal(word, padded)
    assert padded.exponent_sum() == word.exponent_sum()
    nf = normal_form(word)
    recomposed_exponent = nf.infimum * word.strands * (word.strands - 1) // 2 + sum(
        sum(1 for i in range(len(f)) for j in range(i + 1, len(f)) if f[i] > f[j])
        for f in nf.factors
    )
    assert recomposed_exponent == word.exponent_sum()


@settings(deadline=None)
@given(words)
def test_knot_closures_have_unimodular_intersection_form(word):
    if not closure_info(word).is_knot:
        return
    matrix = seifert_from_closure(word).matrix
    size = len(matrix)
    skew = [
        [matrix[i][j] - matrix[j][i] for j in range(size)] for i in range(size)
    ]
    assert abs(integer_determinant(skew)) == 1


@settings(deadline=None, max_examples=40)
@given(words)
def test_knot_closure_polynomials_are_palindromic(word):
    if not closure_info(word).is_knot:
        return
    poly = alexander_from_seifert(seifert_from_closure(word).matrix)
    assert abs(poly.evaluate_ones()) == 1
    assert is_palindromic(poly)


slopes = st.builds(
    Slope,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-9, max_value=9),
).filter(lambda s: True)

slope_pairs = st.tuples(
    st.integers(min_value=-9, max_value=9), st.integers(min_value=-9, max_value=9)
).filter(lambda pq: pq != (0, 0))


@given(slope_pairs, slope_pairs)
def test_slope_image_round_trip(pq, ab):
    h = ((1, pq[0]), (0, 1)) if pq[1] % 2 else ((1, 0), (pq[0], 1))
    h_inv = ((1, -pq[0]), (0, 1)) if pq[1] % 2 else ((1, 0), (-pq[0], 1))
    for sset in [
        EmptySlopes(),
        SingleSlope(Slope(*ab)),
        SlopeInterval(Slope(*ab), Slope(ab[1] or 1, ab[0])),
        AllButLongitude(Slope(*ab)),
    ]:
        assert slope_image(slope_image(sset, h), h_inv) == sset


evidence_flags = [
    f.name
    for f in dataclasses.fields(twistfam.Evidence)
    if f.type == "bool" or f.type is bool
]


@given(
    st.dictionaries(st.sampled_from(evidence_flags), st.booleans(), max_size=6),
    st.sampled_from(evidence_flags),
)
def test_classify_rules_is_monotone(flags, extra):
    try:
        before = {v.verdict for v in twistfam.classify_rules(twistfam.Evidence(**flags))}
        after_flags = dict(flags)
        after_flags[extra] = True
        after = {
            v.verdict for v in twistfam.classify_rules(twistfam.Evidence(**after_flags))
        }
    except EvidenceContradictionError:
        return
    assert before <= after
