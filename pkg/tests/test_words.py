import pytest
from hypothesis import given, strategies as st

from gdaha.arith import I, ONE, u
from gdaha.generators import build, idempotent
from gdaha.operators import Operator
from gdaha.words import (
    AUTOMORPHISMS, CORE, IDENTITY, SYMBOLS, Word, auto_apply, auto_compose, automorphism, ch_word, parse_word, rho,
    word, word_inv,
)
from gdaha.relations import spherical_words
from gdaha.generators import build_skein_image

letters = st.lists(st.tuples(st.sampled_from(SYMBOLS), st.sampled_from((-2, -1, 1, 2))), max_size=4)
# rho grows quickly with length; keep represented words short
short = st.lists(st.tuples(st.sampled_from(SYMBOLS), st.sampled_from((-1, 1))), max_size=2)


def test_identity_word():
    assert rho(Word(())) == Operator.identity()
    assert str(Word(())) == "1"


def test_merging():
    assert word("T0", "T0", ("T0", -2)) == Word(())
    assert word("T0", ("T0", 2)).factors == (("T0", 3),)


def test_rho_examples():
    assert rho(word("T1v")) == rho(word(("X", -1), ("T1", -1)))
    assert rho(word("U1v", "U1", "U0", "U0v")) == Operator.mult(1 / u ** 2)


def test_ch_examples():
    e = idempotent()
    assert ch_word(word("U1", "U0")) * e == build_skein_image("k6") * e
    assert ch_word(word("T1", "T0")) * e == build_skein_image("k3") * e
    assert ch_word(word("T0", scalar=I)) == build_skein_image("k1")


def test_auto_examples():
    t2, t5, t1 = automorphism("T2"), automorphism("T5"), automorphism("T1")
    assert auto_apply(t2, word("T0")) == word("U0", "T0", scalar=I / u)
    assert auto_apply(t5, word("U1")) == word("U1", "X", "T1", scalar=-I * u)
    assert rho(t1(t1.inverse()(word("U0")))) == build("U0")
    assert rho(t1.inverse()(word("U0"))) == rho(word("U0", "T0", scalar=I / u))


def test_automorphism_lookup():
    assert automorphism("T3^-1").images == automorphism("T3").inverse_images
    assert automorphism("Ty").images == automorphism("T3").images
    with pytest.raises(KeyError):
        automorphism("T9")


def test_compose_order():
    # (phi * psi)(w) = phi(psi(w))
    a, b = automorphism("T1"), automorphism("T2")
    w = word("T0", "U0")
    assert rho(auto_compose(a, b)(w)) == rho(a(b(w)))


@pytest.mark.parametrize("name", sorted(AUTOMORPHISMS))
def test_round_trip(name):
    phi = automorphism(name)
    gens = ("T0", "T1", "X") if name.startswith("sigma") else CORE
    for s in gens:
        assert rho(phi.inverse()(phi(Word.gen(s)))) == build(s)


def test_parse_word():
    assert parse_word("[i/u] U0 T0^-1") == word("U0", ("T0", -1), scalar=I / u)
    with pytest.raises(ValueError):
        parse_word("T7")


@given(letters)
def test_word_inverse_involution(fs):
    w = word(*fs)
    assert word_inv(word_inv(w)) == w
    assert w * word_inv(w) == Word(())


@given(short, short)
def test_rho_homomorphism(a, b):
    w, v = word(*a), word(*b)
    assert rho(w * v) == rho(w) * rho(v)


@given(short)
def test_rho_inverse(fs):
    w = word(*fs)
    assert rho(w) * rho(word_inv(w)) == Operator.identity()


def test_spherical_words_match_images():
    e = idempotent()
    for k, w in spherical_words().items():
        assert ch_word(w) * e == build_skein_image(k) * e
