import pytest

from gdaha import askey_wilson as aw
from gdaha.arith import ONE, u, x, x0, x1

Q = u ** 4


def test_qpoch():
    z = x0
    assert aw.qpoch(z, 0) == ONE
    assert aw.qpoch(z, 1) == 1 - z
    assert aw.qpoch(1 / Q, 2).is_zero()


def test_params():
    p = aw.aw_params("generic")
    from gdaha.arith import t0, t1, t2, t3
    assert p.a == 1 / (t1 * t3) and p.b == -t3 / t1
    assert p.c == u ** 2 / (t0 * t2) and p.d == -u ** 2 * t2 / t0


def test_p0():
    assert aw.aw_poly(0).value == ONE
    assert aw.aw_poly(0, "star").value == ONE
    with pytest.raises(ValueError):
        aw.aw_poly(-1)


@pytest.mark.parametrize("m", range(5))
def test_symmetric_and_degree(m):
    p = aw.aw_poly(m).value
    assert aw.is_symmetric(p)
    top = max(e[-2] for e in p.numerator_terms()) - min(e[-2] for e in p.denominator_terms())
    assert top == m


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("mode", ("generic", "star"))
def test_eigen(m, mode):
    assert aw.verify_eigen(m, mode).passed


@pytest.mark.parametrize("m", range(5))
def test_eigen_star(m):
    assert aw.verify_eigen_star(m).passed


@pytest.mark.parametrize("m", range(4))
def test_three_term(m):
    assert aw.verify_three_term(m).passed


def test_three_term_m0_drops_last_coefficient():
    assert aw.three_term_coefficients(0)[2].is_zero()


@pytest.mark.parametrize("m", range(4))
def test_star_by_substitution(m):
    assert aw.star_by_substitution(m) == aw.aw_poly(m, "star").value


def test_wrong_eigenvalue_fails():
    p = aw.aw_poly(1, "star").value
    from gdaha.generators import A_y
    assert A_y().apply(p) != A_y().apply(ONE) * p * x
