"""Schwartz-Zippel equality probe for rational functions.

a - b is evaluated at random points modulo a 61-bit prime p = 1 (mod 4),
with i mapped to a fixed square root of -1. A nonzero residue proves
inequality; agreement at every sample means equal with high probability.
"""

import random

from ._vars import NVARS
from .ratfunc import RatFunc

PRIME = 2305843009213693921
SQRT_M1 = 583529827753931384

assert SQRT_M1 * SQRT_M1 % PRIME == PRIME - 1


class UnluckyEvaluation(ArithmeticError):
    """Every sampled point hit a zero of a denominator."""


def probe_zero(f, seed=0, samples=3):
    """False if ``f`` is certainly nonzero; True if it vanished at every sample."""
    if f.is_zero():
        return True
    rng = random.Random(seed)
    usable = 0
    for _ in range(samples * 4):
        point = [rng.randrange(2, PRIME - 1) for _ in range(NVARS)]
        n, d = f.eval_mod(point, PRIME, SQRT_M1)
        if d == 0:
            continue
        if n != 0:
            return False
        usable += 1
        if usable >= samples:
            return True
    raise UnluckyEvaluation(f"no usable evaluation point for seed {seed}")


def probe_eq(a, b, seed=0, samples=3):
    """Probabilistic a == b. Evaluates numerator and denominator of each side
    separately so no subtraction (and no gcd) is needed."""
    if not isinstance(a, RatFunc):
        a = RatFunc.const(a)
    if not isinstance(b, RatFunc):
        b = RatFunc.const(b)
    rng = random.Random(seed)
    usable = 0
    for _ in range(samples * 4):
        point = [rng.randrange(2, PRIME - 1) for _ in range(NVARS)]
        na, da = a.eval_mod(point, PRIME, SQRT_M1)
        nb, db = b.eval_mod(point, PRIME, SQRT_M1)
        if da == 0 or db == 0:
            continue
        if (na * db - nb * da) % PRIME:
            return False
        usable += 1
        if usable >= samples:
            return True
    raise UnluckyEvaluation(f"no usable evaluation point for seed {seed}")
