import pytest

from gdaha.arith import I, ONE, ch, u, x, x0, x1
from gdaha.generators import (
    CURVES, INVERTIBLE, MODES, STAR_BINDINGS, UnknownGenerator, G, K, build, build_skein_image, curve_k2_power,
    idempotent, omega,
)
from gdaha.operators import S, Operator

QH = u ** 2


def test_X_is_multiplication():
    for mode in MODES:
        assert build("X", mode) == Operator.mult(x)


def test_K00_terms():
    k = build("K", n=0, b=0)
    assert sorted(k.terms) == [(0, 0, -1, 0), (0, 0, 1, 0)]
    assert k.terms[(0, 0, 1, 0)] == -1 / (1 - x0 ** 2)
    assert k.terms[(0, 0, -1, 0)] == (QH * x + x0 ** 2) * (QH ** 3 * x + x0 ** 2) / (u ** 4 * x * (1 - x0 ** 2))


def test_idempotent_form():
    c = (QH + x) * (QH + x * x1 ** 2) / ((1 - x ** 2) * (u ** 4 - x1 ** 2))
    assert build("E") == (Operator.identity() + S) * Operator.mult(c)


@pytest.mark.parametrize("mode", MODES)
def test_idempotent(mode):
    e = idempotent(mode)
    assert e * e == e
    assert S * e == e


@pytest.mark.parametrize("name", INVERTIBLE)
def test_inverses(name):
    g, h = build(name), build(name, inverse=True)
    assert g * h == Operator.identity() and h * g == Operator.identity()


@pytest.mark.parametrize("name", ("T0", "T1", "T0v", "T1v", "E"))
def test_star_is_specialization(name):
    assert build(name, "generic").subst_params(STAR_BINDINGS) == build(name, "star")


def test_u_family_needs_star():
    with pytest.raises(UnknownGenerator):
        build("U0", "generic")
    with pytest.raises(UnknownGenerator):
        build("nonsense")


def test_X_from_T():
    for mode in MODES:
        assert (build("T0", mode) * build("T0v", mode)).scale(QH) == build("X", mode)


def test_skein_images():
    assert build_skein_image("k1") == Operator.mult(ch(x0))
    assert build_skein_image("k2") == G(0, 0).scale(I / u)
    assert curve_k2_power(0) == build_skein_image("k2")
    assert curve_k2_power(-1) == G(-1, 0).scale(I)
    assert set(CURVES) == {"k1", "k2", "k3", "k4", "k5", "k6"}


@pytest.mark.parametrize("n", range(-2, 3))
@pytest.mark.parametrize("b", (0, 1))
def test_G_symmetric(n, b):
    g = G(n, b)
    assert Operator({k: c.subs({"x": 1 / x}) for k, c in g.terms.items()}) == g


def test_omega_sum():
    # omega(x) + omega(1/x) is the weight of the constant part of A(y~)
    assert (omega(x) + omega(1 / x)).subs({"x": 1 / x}) == omega(x) + omega(1 / x)


def test_A_ytilde_constant_part():
    cp = build("A_ytilde").dx_constant_part()
    assert cp == -(G(0, 0) * G(0, 1)).scale(omega(x) + omega(1 / x))


def test_A_y_on_one():
    assert build("A_y").apply(ONE) == -(QH / (x0 * x1) + x0 * x1 / QH)
