"""Pure-Python sparse polynomial kernel.

Used when FLINT is unavailable (or ``GDAHA_KERNEL=python``). Correct but
slow: gcd is the primitive polynomial remainder sequence, recursing on the
storage variable order.
"""

from fractions import Fraction

from ._vars import NVARS, grlex_key

NAME = "python"

_Z = (0,) * NVARS


class Poly:
    __slots__ = ("t",)

    def __init__(self, t=None):
        # exps tuple -> nonzero Fraction
        self.t = t if t is not None else {}

    def __add__(self, other):
        r = dict(self.t)
        for e, c in other.t.items():
            v = r.get(e, 0) + c
            if v:
                r[e] = v
            else:
                r.pop(e, None)
        return Poly(r)

    def __sub__(self, other):
        r = dict(self.t)
        for e, c in other.t.items():
            v = r.get(e, 0) - c
            if v:
                r[e] = v
            else:
                r.pop(e, None)
        return Poly(r)

    def __neg__(self):
        return Poly({e: -c for e, c in self.t.items()})

    def __mul__(self, other):
        a, b = self.t, other.t
        if len(a) < len(b):
            a, b = b, a
        r = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                v = r.get(e, 0) + c1 * c2
                if v:
                    r[e] = v
                else:
                    r.pop(e, None)
        return Poly(r)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.t == other.t

    def __hash__(self):
        return hash(frozenset(self.t.items()))

    def __len__(self):
        return len(self.t)

    def __repr__(self):
        return f"Poly({self.t!r})"


_ZERO = Poly()
_ONE = Poly({_Z: Fraction(1)})


def zero():
    return _ZERO


def one():
    return _ONE


def gen(i):
    e = [0] * NVARS
    e[i] = 1
    return Poly({tuple(e): Fraction(1)})


def const(c):
    c = Fraction(c)
    return Poly({_Z: c}) if c else _ZERO


def from_terms(d):
    return Poly({e: Fraction(c) for e, c in d.items() if c})


raw_terms = terms = lambda p: dict(p.t)


def from_raw(d):
    return Poly({e: c for e, c in d.items() if c})


def to_fraction(c):
    return Fraction(c)


def is_zero(p):
    return not p.t


def is_one(p):
    return p.t == _ONE.t


def is_constant(p):
    return not p.t or (len(p.t) == 1 and _Z in p.t)


def _lead(p):
    return max(p.t, key=grlex_key)


def lc(p):
    return p.t[_lead(p)]


def scale(p, c):
    c = Fraction(c)
    if not c:
        return _ZERO
    return Poly({e: v * c for e, v in p.t.items()})


def degrees(p):
    d = [0] * NVARS
    for e in p.t:
        for i, k in enumerate(e):
            if k > d[i]:
                d[i] = k
    return tuple(d)


def nterms(p):
    return len(p.t)


def divexact(a, b):
    """Exact quotient a / b; raises ArithmeticError if b does not divide a."""
    if not b.t:
        raise ZeroDivisionError("polynomial division by zero")
    lb = _lead(b)
    cb = b.t[lb]
    r = dict(a.t)
    q = {}
    while r:
        lr = max(r, key=grlex_key)
        m = tuple(i - j for i, j in zip(lr, lb))
        if min(m) < 0:
            raise ArithmeticError("polynomial division is not exact")
        c = r[lr] / cb
        q[m] = c
        for e, v in b.t.items():
            k = tuple(i + j for i, j in zip(e, m))
            w = r.get(k, 0) - c * v
            if w:
                r[k] = w
            else:
                r.pop(k, None)
    return Poly(q)


# --- gcd ------------------------------------------------------------------
# univariate view: dict degree -> Poly free of the main variable


def _to_univ(p, v):
    out = {}
    for e, c in p.t.items():
        d = e[v]
        ee = e[:v] + (0,) + e[v + 1:]
        out.setdefault(d, {})[ee] = c
    return {d: Poly(t) for d, t in out.items()}


def _from_univ(u, v):
    r = {}
    for d, c in u.items():
        for e, x in c.t.items():
            r[e[:v] + (d,) + e[v + 1:]] = x
    return Poly(r)


def _monic(p):
    if not p.t:
        return p
    return scale(p, 1 / lc(p))


def _content(u):
    g = _ZERO
    for c in u.values():
        g = gcd(g, c)
        if is_constant(g):
            return _ONE
    return g


def _prem(a, b, v):
    """Pseudo-remainder of a by b as univariate polynomials in variable v."""
    n = max(b)
    lb = b[n]
    xv = [0] * NVARS
    r = dict(a)
    while r and max(r) >= n:
        m = max(r)
        lr = r[m]
        xv[v] = m - n
        sh = Poly({tuple(xv): Fraction(1)})
        nr = {}
        for d, c in r.items():
            nr[d] = c * lb
        for d, c in b.items():
            k = d + m - n
            nr[k] = nr.get(k, _ZERO) - lr * c
        r = {d: c for d, c in nr.items() if c.t}
    return r


def _primpart(u):
    c = _content(u)
    if is_one(c):
        return u
    return {d: divexact(x, c) for d, x in u.items()}


def gcd(a, b):
    if not a.t:
        return _monic(b)
    if not b.t:
        return _monic(a)
    if is_constant(a) or is_constant(b):
        return _ONE
    da, db = degrees(a), degrees(b)
    v = next((i for i in range(NVARS) if da[i] or db[i]), None)
    if not da[v]:
        return gcd(a, _content(_to_univ(b, v)))
    if not db[v]:
        return gcd(b, _content(_to_univ(a, v)))
    ua, ub = _to_univ(a, v), _to_univ(b, v)
    ca, cb = _content(ua), _content(ub)
    c = gcd(ca, cb)
    pa = {d: divexact(x, ca) for d, x in ua.items()} if not is_one(ca) else ua
    pb = {d: divexact(x, cb) for d, x in ub.items()} if not is_one(cb) else ub
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, v)
        if not r:
            g = pb
            break
        if max(r) == 0:
            g = {0: _ONE}
            break
        pa, pb = pb, _primpart(r)
    g = _primpart(g)
    return _monic(_from_univ(g, v) * c)


def num_den_terms(p):
    return {e: (c.numerator, c.denominator) for e, c in p.t.items()}
