import pytest
from hypothesis import given, strategies as st

from gdaha.arith import ONE, u, x, x0, x1, t0, I
from gdaha.operators import (
    D, D_INV, S, Operator, ShiftedVariableBinding, op_apply, op_combine, op_compose, op_dx_constant_part,
    op_scale, op_subst_params,
)

from conftest import laurent, ratfuncs

D0 = Operator.monomial(e0=1)
D1 = Operator.monomial(e1=1)


def test_combine():
    a = Operator.mult(x) + S
    assert op_combine(a, Operator(), "add") == a
    assert op_combine(a, a, "sub").is_zero()
    assert str(Operator()) == "0"
    assert op_scale(2, S) == Operator.monomial(sigma=1, coeff=ONE * 2)


def test_compose_examples():
    assert op_compose(S, S) == Operator.identity()
    assert op_compose(D, S) == Operator.monomial(sigma=1, e=-1)
    xd = Operator.mult(x) * D
    assert op_compose(xd, xd) == Operator.monomial(e=2, coeff=u ** 4 * x ** 2)


def test_apply_examples():
    assert op_apply(S, x ** 3) == 1 / x ** 3
    assert op_apply(D, x) == u ** 4 * x
    assert op_apply(D0, x0 ** 2) == u ** 4 * x0 ** 2


def test_subst_params():
    op = Operator.mult(t0 + 1 / t0) * D
    assert op_subst_params(op, {"t0": I * x0}) == Operator.mult(I * x0 - I / x0) * D
    for bad in ("x", "x0", "x1", "u"):
        with pytest.raises(ShiftedVariableBinding):
            op_subst_params(op, {bad: ONE})


def test_constant_part():
    c1, c2, c3 = x, x0, x1
    op = Operator.mult(c1) * D + Operator.mult(c2) * S + Operator.mult(c3)
    assert op_dx_constant_part(op) == Operator.mult(c2) * S + Operator.mult(c3)
    assert op_dx_constant_part(Operator()).is_zero()


def test_key_algebra():
    assert S * S == Operator.identity()
    assert D * D_INV == Operator.identity()
    for a in (D0, D1):
        assert a * S == S * a and a * D == D * a


def test_rendering():
    op = Operator.mult(x) * D + S * D0
    assert str(op) == "(x) * D + (1) * s D0"


terms = st.tuples(st.integers(0, 1), st.integers(-1, 1), st.integers(-1, 1), st.integers(-1, 1))


@st.composite
def operators(draw):
    out = Operator()
    for _ in range(draw(st.integers(1, 3))):
        s, e, a, b = draw(terms)
        out = out + Operator.monomial(s, e, a, b, draw(ratfuncs()))
    return out


@given(operators(), operators(), operators())
def test_associativity(a, b, c):
    assert a * (b * c) == (a * b) * c


@given(operators(), operators(), laurent())
def test_homomorphism(a, b, f):
    assert (a * b).apply(f) == a.apply(b.apply(f))


@given(operators(), operators(), operators())
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
