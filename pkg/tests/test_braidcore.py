import pytest

from twistcalc.braidcore import (
    BraidWord,
    closure_info,
    garside_elements,
    normal_form,
    normal_form_equal,
    seifert_from_closure,
    twist_family_word,
)
from twistcalc.errors import ArityError, DomainError, ParseError


def identity(strands):
    return BraidWord(strands)


def test_letter_validation():
    with pytest.raises(ArityError):
        BraidWord(3, (3,))
    with pytest.raises(ArityError):
        BraidWord(2, (0,))
    with pytest.raises(ArityError):
        BraidWord(0, ())
    BraidWord(1, ())  # the identity braid on one strand is fine


def test_garside_two_strands():
    delta, full = garside_elements(2)
    assert delta.letters == (1,)
    assert full.letters == (1, 1)


def test_garside_three_strands():
    delta, full = garside_elements(3)
    assert delta.letters == (2, 1)
    assert len(full.letters) == 6
    assert normal_form(delta ** 3) == normal_form(full)


def test_garside_five_strands_full_twist():
    delta, full = garside_elements(5)
    assert len(full.letters) == 20
    # permutation-braid composition oracle: the full twist is a pure braid
    # whose normal form is exactly Delta^2 with no proper factors
    assert full.permutation() == tuple(range(5))
    nf = normal_form(full)
    assert (nf.infimum, nf.factors) == (2, ())


def test_garside_invalid_arity():
    with pytest.raises(ArityError):
        garside_elements(1)


def test_inverse_reverses_and_negates():
    w = BraidWord(3, (1, 2))
    assert w.inverse().letters == (-2, -1)


def test_mirror_is_inverse():
    w = BraidWord(4, (1, -3, 2))
    assert w.mirror() == w.inverse()


def test_double_closure_has_strand_many_components():
    # the closure of mirror(kappa) * kappa is the double, a link with one
    # component per strand and exponent sum zero
    kappa = BraidWord(3, (1, 2, 2, -1))
    double = kappa.mirror() * kappa
    info = closure_info(double)
    assert info.components == 3
    assert info.exponent_sum == 0


def test_compose_concatenates():
    delta, _ = garside_elements(3)
    assert (delta * delta).letters == (2, 1, 2, 1)


def test_compose_strand_mismatch():
    with pytest.raises(ArityError):
        BraidWord(2, (1,)) * BraidWord(3, (1,))


def test_twist_family_word_torus_example():
    kappa = BraidWord(2, (1, 1, 1))
    assert twist_family_word(kappa, 2).letters == (1,) * 7


def test_twist_family_word_zero_is_identity_twist():
    kappa = BraidWord(4, (3, -1, 2))
    assert twist_family_word(kappa, 0) == kappa


def test_twist_family_word_negative_letter_count():
    kappa = BraidWord(3, (2, 1))
    word = twist_family_word(kappa, -2)
    assert len(word.letters) == len(kappa.letters) + 2 * 3 * 2
    assert normal_form_equal(twist_family_word(word, 2), kappa)


def test_twist_family_delta_powers():
    delta, _ = garside_elements(3)
    kappa = delta ** 4
    assert normal_form_equal(twist_family_word(kappa, 1), delta ** 7)


def test_twist_family_additivity():
    kappa = BraidWord(3, (1, -2, 1))
    a = twist_family_word(twist_family_word(kappa, 2), 1)
    b = twist_family_word(kappa, 3)
    assert normal_form_equal(a, b)


def test_closure_info_examples():
    trefoil = closure_info(BraidWord(2, (1, 1, 1)))
    assert trefoil.is_knot and trefoil.exponent_sum == 3
    hopf = closure_info(BraidWord(2, (1, 1)))
    assert hopf.components == 2 and not hopf.is_knot
    _, full = garside_elements(3)
    info = closure_info(full)
    assert info.components == 3 and info.exponent_sum == 6


def test_normal_form_equal_examples():
    assert normal_form_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not normal_form_equal(BraidWord(2, (1,)), BraidWord(2, (-1,)))
    for omega in range(2, 7):
        delta, full = garside_elements(omega)
        assert normal_form_equal(delta ** omega, full)


def test_normal_form_equal_strand_mismatch():
    with pytest.raises(ArityError):
        normal_form_equal(BraidWord(2, (1,)), BraidWord(3, (1,)))


def test_normal_form_factors_are_proper():
    nf = normal_form(BraidWord(4, (1, -2, 3, 3, -1)))
    identity_perm = tuple(range(4))
    longest = tuple(reversed(range(4)))
    for factor in nf.factors:
        assert factor != identity_perm and factor != longest


def test_normal_form_factors_are_left_weighted():
    # every generator that can start a factor must finish the previous one
    def starting(p):
        return {i for i in range(1, len(p)) if p[i - 1] > p[i]}

    def finishing(p):
        inverse = [0] * len(p)
        for position, value in enumerate(p):
            inverse[value] = position
        return {i for i in range(1, len(p)) if inverse[i - 1] > inverse[i]}

    for letters in [(1, -2, 3, 3, -1, 2, 2), (1, 1, 2, -3, 2, 1), (2, 1, 2, 1, 2, 1)]:
        nf = normal_form(BraidWord(4, letters))
        for a, b in zip(nf.factors, nf.factors[1:]):
            assert starting(b) <= finishing(a)


def test_seifert_trefoil():
    data = seifert_from_closure(BraidWord(2, (1, 1, 1)))
    assert data.euler_characteristic == -1
    assert data.seifert_circles == 2
    assert data.genus == 1
    assert data.minimal
    assert data.matrix == ((-1, 1), (0, -1))


def test_seifert_torus_2_5():
    data = seifert_from_closure(BraidWord(2, (1,) * 5))
    assert data.genus == 2  # (p-1)(q-1)/2 for T(2,5)


def test_seifert_unknot_on_one_strand():
    data = seifert_from_closure(BraidWord(1))
    assert data.euler_characteristic == 1
    assert data.genus == 0
    assert data.matrix == ()


def test_seifert_link_closure_has_no_genus():
    data = seifert_from_closure(BraidWord(2, (1, 1)))
    assert data.genus is None
    with pytest.raises(DomainError):
        data.knot_genus()


def test_positive_word_genus_formula():
    for strands, q in [(2, 3), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6)]:
        delta, _ = garside_elements(strands)
        word = delta ** q
        data = seifert_from_closure(word)
        assert data.genus == (strands - 1) * (q - 1) // 2
        assert data.genus == (len(word.letters) - strands + 1) // 2


def test_matrix_dimension_matches_euler_characteristic():
    word = BraidWord(3, (1, 2, 2, 2))
    data = seifert_from_closure(word)
    assert closure_info(word).is_knot
    assert len(data.matrix) == 1 - data.euler_characteristic


def test_parse_format_round_trip():
    word = BraidWord.parse("B3: 2 1 2 -1")
    assert word == BraidWord(3, (2, 1, 2, -1))
    assert BraidWord.parse(word.format()) == word


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError):
        BraidWord.parse("B2: 2")
    with pytest.raises(ParseError):
        BraidWord.parse("B2: x")
    with pytest.raises(ParseError):
        BraidWord.parse("2: 1")
    with pytest.raises(ParseError):
        BraidWord.parse("B2 1 1")
