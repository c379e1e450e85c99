"""q-difference-reflection operators in normal form.

An operator is a finite sum ``sum c_k * s^sigma D^e D0^e0 D1^e1`` with
rational-function coefficients written to the left. The term with key
``(sigma, e, e0, e1)`` acts on f by

    f  ->  c * f(u^(4e) x^((-1)^sigma), u^(2 e0) x0, u^(2 e1) x1)

so ``D`` is the shift x -> q x and ``D0``, ``D1`` shift x0, x1 by q^(1/2).
The reflection s acts on x only.
"""

from fractions import Fraction

from .arith import ONE, GaussianRational, RatFunc, probe_eq

IDENTITY_KEY = (0, 0, 0, 0)

_SHIFTED = ("x", "x0", "x1", "u")


class ShiftedVariableBinding(ValueError):
    """Parameter substitution touched a variable the shifts act on."""


def _coerce(c):
    if isinstance(c, RatFunc):
        return c
    if isinstance(c, (int, Fraction, GaussianRational)):
        return RatFunc.const(c)
    raise TypeError(f"cannot use {type(c).__name__} as an operator coefficient")


def _sum(values):
    """Exact sum; coefficients with equal denominators are merged first."""
    if len(values) == 1:
        return values[0]
    groups = []
    for v in values:
        for g in groups:
            if g[0].den == v.den:
                g.append(v)
                break
        else:
            groups.append([v])
    partial = []
    for g in groups:
        if len(g) == 1:
            partial.append(g[0])
        else:
            acc_re, acc_im = g[0].re, g[0].im
            for v in g[1:]:
                acc_re = acc_re + v.re
                acc_im = acc_im + v.im
            partial.append(RatFunc.make(acc_re, acc_im, g[0].den))
    # balanced pairwise reduction keeps intermediate denominators small
    while len(partial) > 1:
        nxt = [partial[i] + partial[i + 1] for i in range(0, len(partial) - 1, 2)]
        if len(partial) % 2:
            nxt.append(partial[-1])
        partial = nxt
    return partial[0]


class Operator:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    # -- constructors ------------------------------------------------------
    @classmethod
    def identity(cls):
        return cls({IDENTITY_KEY: ONE})

    @classmethod
    def mult(cls, c):
        """Multiplication by the function c."""
        return cls({IDENTITY_KEY: _coerce(c)})

    @classmethod
    def monomial(cls, sigma=0, e=0, e0=0, e1=0, coeff=ONE):
        return cls({(sigma, e, e0, e1): _coerce(coeff)})

    # -- linear structure --------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __add__(self, o):
        if not isinstance(o, Operator):
            o = Operator.mult(o)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return Operator(out)

    __radd__ = __add__

    def __neg__(self):
        return Operator({k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        if not isinstance(o, Operator):
            o = Operator.mult(o)
        return self + (-o)

    def __rsub__(self, o):
        return Operator.mult(o) - self

    def scale(self, c):
        """Left multiplication by the function c."""
        c = _coerce(c)
        if c.is_zero():
            return Operator()
        return Operator({k: c * v for k, v in self.terms.items()})

    # -- composition -------------------------------------------------------
    def compose(self, o):
        """self o o (o acts first)."""
        acc = {}
        for k1, c1 in self.terms.items():
            s1, e1, a1, b1 = k1
            for k2, c2 in o.terms.items():
                s2, e2, a2, b2 = k2
                key = (s1 ^ s2, (-e1 if s2 else e1) + e2, a1 + a2, b1 + b2)
                acc.setdefault(key, []).append(c1 * c2.shift(*k1))
        return Operator({k: _sum(v) for k, v in acc.items()})

    def __mul__(self, o):
        if isinstance(o, Operator):
            return self.compose(o)
        return self.compose(Operator.mult(o))

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("operators have no generic inverse")
        r = Operator.identity()
        for _ in range(n):
            r = r * self
        return r

    # -- action on functions -----------------------------------------------
    def apply(self, f):
        f = _coerce(f)
        vals = [c * f.shift(*k) for k, c in self.terms.items()]
        vals = [v for v in vals if not v.is_zero()]
        if not vals:
            return RatFunc.const(0)
        return _sum(vals)

    def subst_params(self, bindings):
        bad = [n for n in bindings if n in _SHIFTED]
        if bad:
            raise ShiftedVariableBinding(f"cannot bind shifted variable(s) {bad}")
        return Operator({k: c.subs(bindings) for k, c in self.terms.items()})

    def dx_constant_part(self):
        """Terms free of the x-shift D (any s, D0, D1)."""
        return Operator({k: c for k, c in self.terms.items() if k[1] == 0})

    # -- comparison and printing -------------------------------------------
    def __eq__(self, o):
        if not isinstance(o, Operator):
            o = Operator.mult(o)
        if self.terms.keys() != o.terms.keys():
            return False
        return all(c == o.terms[k] for k, c in self.terms.items())

    def __hash__(self):
        return hash(tuple(sorted((k, hash(c)) for k, c in self.terms.items())))

    def probe_eq(self, o, seed=0):
        keys = set(self.terms) | set(o.terms)
        zero = RatFunc.const(0)
        return all(probe_eq(self.terms.get(k, zero), o.terms.get(k, zero), seed=seed)
                   for k in sorted(keys))

    def keys(self):
        return sorted(self.terms)

    def size(self):
        return sum(c.size() for c in self.terms.values())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = f"({self.terms[k]})"
            sym = _key_str(k)
            parts.append(f"{c} * {sym}" if sym else c)
        return " + ".join(parts)

    def __repr__(self):
        return f"Operator({self})"


def _key_str(k):
    sigma, e, e0, e1 = k
    out = []
    if sigma:
        out.append("s")
    for name, p in (("D", e), ("D0", e0), ("D1", e1)):
        if p == 1:
            out.append(name)
        elif p:
            out.append(f"{name}^{p}")
    return " ".join(out)


def op_combine(a, b, kind):
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    raise ValueError(f"unknown combination {kind!r}")


def op_scale(c, a):
    return a.scale(c)


def op_compose(a, b):
    return a.compose(b)


def op_apply(a, f):
    return a.apply(f)


def op_subst_params(a, bindings):
    return a.subst_params(bindings)


def op_dx_constant_part(a):
    return a.dx_constant_part()


# frequently used building blocks
S = Operator.monomial(sigma=1)
D = Operator.monomial(e=1)
D_INV = Operator.monomial(e=-1)
