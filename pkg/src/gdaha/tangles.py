"""Rational tangles: even continued fractions, twist words, and the constant
term of the operator attached to the tangle curve."""

import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .arith import ONE, RatFunc, u
from .arith._vars import INDEX, NVARS
from .arith.probe import PRIME, SQRT_M1, UnluckyEvaluation
from .generators import build
from .operators import Operator, _sum
from .words import IDENTITY, Word, automorphism, word

Q = u ** 4

# x0 = x1 = q^(1/2), x = -q^(1/2)
SPECIAL_POINT = {"x0": u ** 2, "x1": u ** 2, "x": -u ** 2}

CONVENTIONS = ("sum-then-substitute", "substitute-then-sum", "fold-s")
FROZEN_CONVENTION = "sum-then-substitute"

TWIST_AUTOMORPHISM = {"Dx": "Tx", "Dy": "T3", "D1": "T1", "D2": "T2", "D3": "T3", "D4": "T4", "D5": "T5"}

BASE_WORD = word("U1", "U0")  # ch-argument of A(y~)


class NoEvenExpansion(ValueError):
    pass


@dataclass(frozen=True)
class ContinuedFraction:
    entries: tuple
    value: Fraction

    def evaluate(self):
        v = Fraction(self.entries[-1])
        for a in reversed(self.entries[:-1]):
            v = a + 1 / v
        return v


@dataclass(frozen=True)
class TwistWord:
    """Twists listed left to right; the last one is applied first."""

    twists: tuple

    def __str__(self):
        return " ".join(f"{a}^{p}" for a, p in self.twists)


def cf_expand(p, q):
    """All-even continued fraction of p/q, e.g. 7/2 = 4 + 1/(-2)."""
    if q == 0:
        raise NoEvenExpansion("zero denominator")
    r = Fraction(p, q)
    entries = []
    while True:
        a = 2 * round(r / 2)
        if abs(r - a) >= 1:
            raise NoEvenExpansion(f"{Fraction(p, q)} has no all-even expansion (odd integer {r})")
        if a == 0:
            raise NoEvenExpansion(f"{Fraction(p, q)} leads to a zero entry")
        entries.append(a)
        if r == a:
            break
        r = 1 / (r - a)
    return ContinuedFraction(tuple(entries), Fraction(p, q))


def tangle_twistword(cf):
    applied = []
    for k, a in enumerate(cf.entries):
        applied.append(("Dx", -a // 2) if k % 2 == 0 else ("Dy", a // 2))
    return TwistWord(tuple(reversed(applied)))


def parse_twistword(text):
    """'Dy^1 Dx^-1' -> TwistWord((('Dy', 1), ('Dx', -1)))"""
    twists = []
    for tok in text.split():
        m = re.fullmatch(r"(Dx|Dy|D[1-5])(?:\^(-?\d+))?", tok)
        if not m:
            raise ValueError(f"bad twist {tok!r}")
        power = int(m.group(2) or 1)
        if power:
            twists.append((m.group(1), power))
    return TwistWord(tuple(twists))


def parse_rational(text):
    m = re.fullmatch(r"\s*(-?\d+)\s*/\s*(-?\d+)\s*", text)
    if not m:
        raise ValueError(f"expected p/q, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def twist_automorphism(tw):
    out = IDENTITY
    for axis, power in tw.twists:
        out = out * (automorphism(TWIST_AUTOMORPHISM[axis]) ** power)
    return out


def twist_chword(tw, base=BASE_WORD):
    return twist_automorphism(tw)(base)


def tangle_chword(cf):
    return twist_chword(tangle_twistword(cf))


# words displayed for the two knot examples
def display_word(r):
    w = word
    if r == "5/2":
        v = w("T0v", "T1", "T0")
        return w("U1", "T0", "T1") * v.inverse() * w(("T0", -1), "U0", "T1") * v
    if r == "7/2":
        z = w("T1", "T0", "T1v", ("T0", -1))
        return w("U1", ("T1", -1), ("T0", -1)) * z * w("T1", "T0", "T1v", "T1", "U0") * z ** -2
    raise KeyError(r)


# --- constant terms -----------------------------------------------------------------


def daha_poly(op):
    return op.apply(ONE)


def _finish(coeffs, convention):
    """coeffs: list of (sigma, coefficient) for the D^0 keys."""
    if convention == "fold-s":
        coeffs = [(0, c.subs({"x": 1 / RatFunc.var("x")}) if s else c) for s, c in coeffs]
    if convention == "substitute-then-sum":
        vals = [c.subs(SPECIAL_POINT) for _, c in coeffs]
        return _sum(vals) if vals else RatFunc.const(0)
    if not coeffs:
        return RatFunc.const(0)
    return _sum([c for _, c in coeffs]).subs(SPECIAL_POINT)


def const_term_special(op, convention=FROZEN_CONVENTION):
    """Const(op)(1) at x0 = x1 = q^(1/2), x = -q^(1/2)."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    part = op.dx_constant_part()
    return _finish([(k[0], c) for k, c in sorted(part.terms.items())], convention)


def _collapsed_rho(w, mode="star"):
    """rho(w) with keys reduced to (sigma, e), built right to left.

    In a composition L o R only the key of L shifts coefficients of R, so
    the D0, D1 exponents of the right factor never matter; they are also
    invisible once the operator is applied to a constant.
    """
    w = w.expand()
    acc = {(0, 0): w.scalar}
    for sym, k in reversed(w.factors):
        g = build(sym, mode, inverse=k < 0)
        for _ in range(abs(k)):
            nxt = {}
            for k1, c1 in g.terms.items():
                s1, e1 = k1[0], k1[1]
                for (s2, e2), c2 in acc.items():
                    nxt.setdefault((s1 ^ s2, (-e1 if s2 else e1) + e2), []).append(c1 * c2.shift(*k1))
            acc = {}
            for key, vals in nxt.items():
                v = _sum(vals)
                if not v.is_zero():
                    acc[key] = v
    return acc


def const_term_word(w, convention=FROZEN_CONVENTION):
    """const_term_special(ch_word(w)) without forming the full operator."""
    coeffs = []
    for part in (w, w.inverse()):
        coeffs += [(s, c) for (s, e), c in sorted(_collapsed_rho(part).items()) if e == 0]
    return _finish(coeffs, convention)


# --- modular screen -----------------------------------------------------------------
#
# A point is (sign of x, exponent of u in x, in x0, in x1); the special point
# is (-1, 2, 2, 2). A shift key moves a point without touching u, so with u
# fixed to a residue every coefficient along the way is just a number.


def _move(pt, key):
    sg, mx, m0, m1 = pt
    s, e, a, b = key
    if s:
        mx = -mx
    return (sg, mx + 4 * e, m0 + 2 * a, m1 + 2 * b)


class _ModEvaluator:
    def __init__(self, uval, mode="star"):
        self.uval = uval
        self.mode = mode
        self.cache = {}

    def point(self, pt):
        sg, mx, m0, m1 = pt
        v = [1] * NVARS
        v[INDEX["u"]] = self.uval
        v[INDEX["x"]] = sg * pow(self.uval, mx, PRIME) % PRIME
        v[INDEX["x0"]] = pow(self.uval, m0, PRIME)
        v[INDEX["x1"]] = pow(self.uval, m1, PRIME)
        return v

    def coeff(self, c, pt):
        k = (id(c), pt)
        r = self.cache.get(k)
        if r is None:
            n, d = c.eval_mod(self.point(pt), PRIME, SQRT_M1)
            if d == 0:
                raise ZeroDivisionError("pole at the sampled point")
            r = self.cache[k] = n * pow(d, -1, PRIME) % PRIME
        return r

    def rho_const(self, w):
        """sum over sigma of the D^0 coefficients of rho(w), at the special point."""
        w = w.expand()
        letters = []
        for sym, k in w.factors:
            letters += [build(sym, self.mode, inverse=k < 0)] * abs(k)
        memo = {}

        def val(j, s, e, pt):
            # coefficient of (s, e) in rho(letters[j:]) at pt
            if j == len(letters):
                return 1 if (s, e) == (0, 0) else 0
            key = (j, s, e, pt)
            r = memo.get(key)
            if r is None:
                r = 0
                for k1, c1 in letters[j].terms.items():
                    s2 = s ^ k1[0]
                    e2 = e - (-k1[1] if s2 else k1[1])
                    if abs(e2) > len(letters) - j:
                        continue
                    rest = val(j + 1, s2, e2, _move(pt, k1))
                    if rest:
                        r += self.coeff(c1, pt) * rest
                r = memo[key] = r % PRIME
            return r

        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * len(letters) + 100))
        try:
            start = (-1, 2, 2, 2)
            total = sum(val(0, s, 0, start) for s in (0, 1))
        finally:
            sys.setrecursionlimit(limit)
        scal_n, scal_d = w.scalar.eval_mod(self.point(start), PRIME, SQRT_M1)
        return total * scal_n * pow(scal_d, -1, PRIME) % PRIME


def screen_word(w, target, seed=0, samples=2):
    """Probabilistic check const_term_word(w) == target, modulo a 61-bit prime.

    Only the sum-then-substitute convention is screened. False is certain;
    True holds with high probability.
    """
    rng = random.Random(seed)
    usable = 0
    for _ in range(samples * 4):
        ev = _ModEvaluator(rng.randrange(2, PRIME - 1))
        try:
            got = (ev.rho_const(w) + ev.rho_const(w.inverse())) % PRIME
            want = ev.coeff(target, (1, 0, 0, 0))
        except ZeroDivisionError:
            continue
        if got != want:
            return False
        usable += 1
        if usable >= samples:
            return True
    raise UnluckyEvaluation(f"no usable evaluation point for seed {seed}")


def screen_rho_equal(w1, w2, seed=0):
    """False if rho(w1) != rho(w2) is certain from their constant terms mod p;
    True means the screen found no difference."""
    rng = random.Random(seed)
    for _ in range(8):
        ev = _ModEvaluator(rng.randrange(2, PRIME - 1))
        try:
            return ev.rho_const(w1) == ev.rho_const(w2)
        except ZeroDivisionError:
            continue
    raise UnluckyEvaluation(f"no usable evaluation point for seed {seed}")


def daha_poly_word(w):
    """daha_poly(ch_word(w)): on the constant 1 every key acts trivially."""
    vals = []
    for part in (w, w.inverse()):
        vals += [c for _, c in sorted(_collapsed_rho(part).items())]
    return _sum(vals) if vals else RatFunc.const(0)


def tangle_const_term(p, q, convention=FROZEN_CONVENTION):
    return const_term_word(tangle_chword(cf_expand(p, q)), convention)


def checkpoint(r):
    """Closed forms for the two knot examples, as functions of q = u^4."""
    if r == "5/2":
        return (Q ** -2 - Q ** -1 + 1 - Q + Q ** 2) / ((1 - Q) * (1 - Q ** 2))
    if r == "7/2":
        return Q * (1 - Q + 2 * Q ** 2 - Q ** 3 + Q ** 4 - Q ** 5) / ((1 - Q) * (1 - Q ** 2))
    raise KeyError(r)


def identity_op():
    return Operator.identity()
