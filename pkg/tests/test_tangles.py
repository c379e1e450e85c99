from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gdaha import tangles
from gdaha.arith import ONE, u
from gdaha.operators import Operator
from gdaha.words import ch_word, word


def test_cf_examples():
    assert tangles.cf_expand(5, 2).entries == (2, 2)
    assert tangles.cf_expand(7, 2).entries == (4, -2)
    for p, q in ((1, 2), (3, 1), (1, 0)):
        with pytest.raises(tangles.NoEvenExpansion):
            tangles.cf_expand(p, q)


@given(st.integers(-60, 60), st.integers(1, 30))
def test_cf_reconstructs(p, q):
    try:
        cf = tangles.cf_expand(p, q)
    except tangles.NoEvenExpansion:
        return
    assert all(a and a % 2 == 0 for a in cf.entries)
    assert cf.evaluate() == Fraction(p, q)


def test_twist_words():
    assert str(tangles.tangle_twistword(tangles.cf_expand(5, 2))) == "Dy^1 Dx^-1"
    assert str(tangles.tangle_twistword(tangles.cf_expand(7, 2))) == "Dy^-1 Dx^-2"
    tw = tangles.parse_twistword("Dy^1 Dx^-1")
    assert tw == tangles.tangle_twistword(tangles.cf_expand(5, 2))
    assert tangles.parse_twistword("D3 D5^0").twists == (("D3", 1),)
    with pytest.raises(ValueError):
        tangles.parse_twistword("Dz^2")


def test_parse_rational():
    assert tangles.parse_rational(" 7 / 2") == (7, 2)
    with pytest.raises(ValueError):
        tangles.parse_rational("7:2")


def test_chword_72_is_displayed_word():
    gen = tangles.tangle_chword(tangles.cf_expand(7, 2))
    assert gen.expand() == tangles.display_word("7/2").expand()


def test_chword_52_differs_from_displayed_word_by_one_exponent():
    gen = tangles.tangle_chword(tangles.cf_expand(5, 2)).expand()
    disp = tangles.display_word("5/2").expand()
    assert len(gen.factors) == len(disp.factors)
    diff = [(a, b) for a, b in zip(gen.factors, disp.factors) if a != b]
    assert diff == [(("T1", -1), ("T1", 1))]


def test_daha_poly_identity():
    assert tangles.daha_poly(Operator.identity()) == ONE


SHORT = [word("U1", "U0"), word("T1", "T0"), word("U1", ("T0", -1), "X"), word("T0v", "U0", "T1")]


@pytest.mark.parametrize("w", SHORT, ids=str)
@pytest.mark.parametrize("conv", tangles.CONVENTIONS)
def test_collapsed_matches_full(w, conv):
    assert tangles.const_term_word(w, conv) == tangles.const_term_special(ch_word(w), conv)


@pytest.mark.parametrize("w", SHORT, ids=str)
def test_daha_poly_collapsed(w):
    assert tangles.daha_poly_word(w) == tangles.daha_poly(ch_word(w))


@pytest.mark.parametrize("w", SHORT, ids=str)
def test_screen_matches_exact(w):
    value = tangles.const_term_word(w)
    assert tangles.screen_word(w, value)
    assert not tangles.screen_word(w, value + 1)


def test_unknot_value():
    q = u ** 4
    assert tangles.const_term_word(word("U1", "U0")) == 1 / ((1 - q) * (1 - q ** 2))


def test_unknown_convention():
    with pytest.raises(ValueError):
        tangles.const_term_special(Operator.identity(), "bogus")


@pytest.mark.parametrize("r", ["5/2", "7/2"])
def test_fast_screen_checkpoints(r):
    p, q = tangles.parse_rational(r)
    w = tangles.tangle_chword(tangles.cf_expand(p, q))
    assert tangles.screen_word(w, tangles.checkpoint(r))
    assert not tangles.screen_word(w, tangles.checkpoint(r) * u ** 4)


def test_screen_separates_52_words():
    gen = tangles.tangle_chword(tangles.cf_expand(5, 2))
    assert not tangles.screen_rho_equal(gen, tangles.display_word("5/2"))
    assert tangles.screen_rho_equal(gen, gen)
    # the displayed word gives -q^-1 times the checkpoint
    assert tangles.screen_word(tangles.display_word("5/2"), -tangles.checkpoint("5/2") / u ** 4)
