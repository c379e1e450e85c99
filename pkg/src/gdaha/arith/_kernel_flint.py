"""Polynomial kernel backed by FLINT's ``fmpq_mpoly`` (compiled)."""

from fractions import Fraction

import flint

from ._vars import NVARS, STORAGE

NAME = "flint"

_ctx = flint.fmpq_mpoly_ctx.get(STORAGE, "deglex")
_gens = _ctx.gens()
_ZERO = _ctx.from_dict({})
_ONE = _ctx.from_dict({(0,) * NVARS: 1})

Poly = flint.fmpq_mpoly


def zero():
    return _ZERO


def one():
    return _ONE


def gen(i):
    return _gens[i]


def const(c):
    c = Fraction(c)
    if not c:
        return _ZERO
    return _ctx.from_dict({(0,) * NVARS: flint.fmpq(c.numerator, c.denominator)})


def from_terms(d):
    return _ctx.from_dict(
        {e: (c if isinstance(c, flint.fmpq) else flint.fmpq(c.numerator, c.denominator))
         for e, c in d.items()}
    )


def raw_terms(p):
    """Exponent -> native coefficient; cheap, for monomial maps."""
    return p.to_dict()


def from_raw(d):
    return _ctx.from_dict(d)


def terms(p):
    return {e: Fraction(int(c.p), int(c.q)) for e, c in p.to_dict().items()}


def to_fraction(c):
    return Fraction(int(c.p), int(c.q))


def is_zero(p):
    return p.is_zero()


def is_one(p):
    return p.is_one()


def is_constant(p):
    return p.is_constant()


def lc(p):
    c = p.leading_coefficient()
    return Fraction(int(c.p), int(c.q))


def scale(p, c):
    c = Fraction(c)
    return p * flint.fmpq(c.numerator, c.denominator)


def gcd(a, b):
    return a.gcd(b)


def divexact(a, b):
    return a / b


def degrees(p):
    return p.degrees()


def nterms(p):
    return len(p)


def num_den_terms(p):
    return {e: (int(c.p), int(c.q)) for e, c in p.to_dict().items()}
