"""Askey-Wilson polynomials as terminating 4phi3 sums, and their eigen and
three-term checks against the operator representation."""

from dataclasses import dataclass
from functools import lru_cache

from .arith import ONE, ZERO, ch, u, x, x0, x1
from .generators import A_y, A_ytilde, STAR_BINDINGS, Y, Y_inv, params
from .relations import Report

Q = u ** 4
QH = u ** 2


class DegenerateParameters(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class AWParams:
    a: object
    b: object
    c: object
    d: object

    @classmethod
    def from_t(cls, t0, t1, t2, t3):
        return cls(1 / (t1 * t3), -t3 / t1, QH / (t0 * t2), -QH * t2 / t0)


@dataclass(frozen=True)
class AWPoly:
    m: int
    value: object

    def __str__(self):
        return str(self.value)


def qpoch(z, k):
    """(z; q)_k = prod_{j<k} (1 - z q^j)."""
    out = ONE
    for j in range(k):
        out = out * (1 - z * Q ** j)
    return out


def aw_params(mode="generic"):
    return AWParams.from_t(*params(mode))


@lru_cache(maxsize=None)
def aw_poly(m, mode="generic"):
    if m < 0:
        raise ValueError("degree must be non-negative")
    p = aw_params(mode)
    a, b, c, d = p.a, p.b, p.c, p.d
    abcd = a * b * c * d
    den = a ** m * qpoch(abcd * Q ** (m - 1), m)
    if den.is_zero():
        raise DegenerateParameters(f"prefactor denominator vanishes at m={m}")
    total = ZERO
    for k in range(m + 1):
        bottom = qpoch(a * b, k) * qpoch(a * c, k) * qpoch(a * d, k) * qpoch(Q, k)
        if bottom.is_zero():
            raise DegenerateParameters(f"series denominator vanishes at k={k}")
        top = qpoch(Q ** -m, k) * qpoch(abcd * Q ** (m - 1), k) * qpoch(a * x, k) * qpoch(a / x, k)
        total = total + top / bottom * Q ** k
    pre = qpoch(a * b, m) * qpoch(a * c, m) * qpoch(a * d, m) / den
    return AWPoly(m, pre * total)


def _ch_y(mode):
    return Y(mode) + Y_inv(mode)


def verify_eigen(m, mode="generic"):
    """ch(Y) P_m = ch(t0 t1 q^-m) P_m."""
    a0, a1, _, _ = params(mode)
    p = aw_poly(m, mode).value
    residual = _ch_y(mode).apply(p) - ch(a0 * a1 / Q ** m) * p
    return Report(f"aw.eigen.{mode}.m{m}", residual.is_zero(), residual,
                  "ch(Y) P_m = ch(t0 t1 q^-m) P_m", "exact")


def verify_eigen_star(m):
    """A(y) P_m = -ch(q^(m+1/2)/(x0 x1)) P_m at t_star."""
    p = aw_poly(m, "star").value
    residual = A_y().apply(p) + ch(Q ** m * QH / (x0 * x1)) * p
    return Report(f"aw.eigen_y.star.m{m}", residual.is_zero(), residual,
                  "A(y) P_m = -ch(q^(m+1/2)/(x0 x1)) P_m", "exact")


def three_term_coefficients(m):
    qm = Q ** m
    norm = (1 - x0 ** 2) * (1 - x1 ** 2)
    up = (qm * Q ** 2 - x0 ** 2 * x1 ** 2) ** 2 / (qm * Q ** 2 * QH * norm)
    mid = ((qm * Q - x0 ** 2) ** 2 + (qm * Q - x1 ** 2) ** 2) / (qm * Q * QH * norm)
    down = (1 - qm) ** 2 / (qm * QH * norm)
    return up, mid, down


def verify_three_term(m):
    """A(y~) P_m = c+ P_{m+1} - c0 P_m + c- P_{m-1}, with P_{-1} = 0."""
    up, mid, down = three_term_coefficients(m)
    rhs = up * aw_poly(m + 1, "star").value - mid * aw_poly(m, "star").value
    if m > 0:
        rhs = rhs + down * aw_poly(m - 1, "star").value
    residual = A_ytilde().apply(aw_poly(m, "star").value) - rhs
    return Report(f"aw.three_term.m{m}", residual.is_zero(), residual,
                  "A(y~) P_m = three-term combination of P_{m+1}, P_m, P_{m-1}", "exact")


def is_symmetric(p):
    return p.subs({"x": 1 / x}) == p


def star_by_substitution(m):
    """P_m computed with generic t and specialized afterwards."""
    return aw_poly(m, "generic").value.subs(STAR_BINDINGS)
