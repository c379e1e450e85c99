"""Rational functions over Q(i) in u=q^(1/4), x, x0, x1, t0..t3.

Canonical form: ``(re + i*im) / den`` with ``re, im, den`` polynomials over
Q, ``den`` real with graded-lex leading coefficient 1, and
``gcd(re, im, den) = 1``. A real denominator always exists (multiply by the
conjugate), and with the gcd condition it is unique, so equality of
functions is equality of the three components.
"""

import io
import tokenize
from fractions import Fraction

from .gaussian import GaussianRational
from . import native
from .kernel import K
from ._vars import DISPLAY, INDEX, NVARS, STORAGE, U, X, X0, X1, grlex_key


class DivisionByZero(ZeroDivisionError):
    pass


class SubstitutionPole(ZeroDivisionError):
    """Substituted denominator vanishes identically."""


_ONE = K.one()
_ZERO = K.zero()
_SCALARS = (int, Fraction, GaussianRational)


def _gcd3(re, im, p):
    if K.is_zero(re):
        return K.gcd(im, p)
    g = K.gcd(re, p)
    if K.is_zero(im) or K.is_constant(g):
        return g
    return K.gcd(im, g)


class RatFunc:
    __slots__ = ("re", "im", "den", "_hash", "_shifts", "_deg")

    def __init__(self, re, im, den):
        # trusted constructor: components must already be canonical
        self.re = re
        self.im = im
        self.den = den
        self._hash = None
        self._shifts = None
        self._deg = None

    # -- construction ------------------------------------------------------
    @classmethod
    def make(cls, re, im=None, den=None, reduce=True):
        """Build from arbitrary polynomial parts and bring to canonical form."""
        if im is None:
            im = _ZERO
        if den is None:
            den = _ONE
        if K.is_zero(den):
            raise DivisionByZero("zero denominator")
        if K.is_zero(re) and K.is_zero(im):
            return ZERO
        if reduce and not K.is_constant(den):
            g = _gcd3(re, im, den)
            if not K.is_constant(g):
                re = K.divexact(re, g)
                if not K.is_zero(im):
                    im = K.divexact(im, g)
                den = K.divexact(den, g)
        c = K.lc(den)
        if c != 1:
            c = 1 / c
            re, im, den = K.scale(re, c), K.scale(im, c), K.scale(den, c)
        return cls(re, im, den)

    @classmethod
    def const(cls, c):
        if isinstance(c, RatFunc):
            return c
        if isinstance(c, GaussianRational):
            return cls(K.const(c.re), K.const(c.im), _ONE)
        if isinstance(c, (int, Fraction)):
            return cls(K.const(c), _ZERO, _ONE)
        raise TypeError(f"cannot convert {type(c).__name__} to RatFunc")

    @classmethod
    def var(cls, name):
        return cls(K.gen(INDEX[name]), _ZERO, _ONE)

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return K.is_zero(self.re) and K.is_zero(self.im)

    def is_one(self):
        return K.is_one(self.re) and K.is_zero(self.im) and K.is_one(self.den)

    def is_real(self):
        return K.is_zero(self.im)

    def is_imag(self):
        return K.is_zero(self.re)

    def is_constant(self):
        return K.is_constant(self.re) and K.is_constant(self.im) and K.is_constant(self.den)

    def degrees(self):
        """Per-variable maximum exponent over all three parts (storage order)."""
        if self._deg is None:
            ds = [K.degrees(self.re), K.degrees(self.den)]
            if not K.is_zero(self.im):
                ds.append(K.degrees(self.im))
            self._deg = tuple(max(t) for t in zip(*ds))
        return self._deg

    def depends_on(self, name):
        return self.degrees()[INDEX[name]] > 0

    def size(self):
        return K.nterms(self.re) + K.nterms(self.im) + K.nterms(self.den)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, o):
        if not isinstance(o, RatFunc):
            if not isinstance(o, _SCALARS):
                return NotImplemented
            o = RatFunc.const(o)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        da, db = self.den, o.den
        if da == db:
            re = self.re + o.re
            im = self.im + o.im
            return RatFunc.make(re, im, da)
        g = K.gcd(da, db)
        if K.is_constant(g):
            re = self.re * db + o.re * da
            im = _cross_im(self.im, db, o.im, da)
            return RatFunc.make(re, im, da * db, reduce=False)
        da1 = K.divexact(da, g)
        db1 = K.divexact(db, g)
        re = self.re * db1 + o.re * da1
        im = _cross_im(self.im, db1, o.im, da1)
        if K.is_zero(re) and K.is_zero(im):
            return ZERO
        h = _gcd3(re, im, g)
        den = da1 * db
        if not K.is_constant(h):
            re = K.divexact(re, h)
            if not K.is_zero(im):
                im = K.divexact(im, h)
            den = K.divexact(den, h)
        return RatFunc.make(re, im, den, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.re, -self.im, self.den)

    def __sub__(self, o):
        if not isinstance(o, RatFunc):
            if not isinstance(o, _SCALARS):
                return NotImplemented
            o = RatFunc.const(o)
        return self + (-o)

    def __rsub__(self, o):
        return RatFunc.const(o) - self

    def __mul__(self, o):
        if not isinstance(o, RatFunc):
            if isinstance(o, (int, Fraction)):
                if not o:
                    return ZERO
                return RatFunc(K.scale(self.re, o), K.scale(self.im, o), self.den)
            if not isinstance(o, GaussianRational):
                return NotImplemented
            o = RatFunc.const(o)
        if self.is_zero() or o.is_zero():
            return ZERO
        if o.is_constant():
            a, b = self, o
        else:
            a, b = o, self
        if b.is_constant():
            bd = K.lc(b.den)
            br, bi = _const_value(b.re) / bd, _const_value(b.im) / bd
            re = _lin(a.re, br, a.im, -bi)
            im = _lin(a.im, br, a.re, bi)
            return RatFunc(re, im, a.den)
        g1 = _gcd3(a.re, a.im, b.den) if not K.is_constant(b.den) else _ONE
        g2 = _gcd3(b.re, b.im, a.den) if not K.is_constant(a.den) else _ONE
        ar, ai, ad = a.re, a.im, a.den
        br, bi, bd = b.re, b.im, b.den
        if not K.is_constant(g1):
            ar = K.divexact(ar, g1)
            ai = K.divexact(ai, g1) if not K.is_zero(ai) else ai
            bd = K.divexact(bd, g1)
        if not K.is_constant(g2):
            br = K.divexact(br, g2)
            bi = K.divexact(bi, g2) if not K.is_zero(bi) else bi
            ad = K.divexact(ad, g2)
        both_complex = not (K.is_zero(ar) or K.is_zero(ai) or K.is_zero(br) or K.is_zero(bi))
        re = _sub(_mul(ar, br), _mul(ai, bi))
        im = _add(_mul(ar, bi), _mul(ai, br))
        return RatFunc.make(re, im, ad * bd, reduce=both_complex)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by the zero function")
        if K.is_zero(self.im):
            return RatFunc.make(self.den, _ZERO, self.re, reduce=False)
        if K.is_zero(self.re):
            # 1/(i a/d) = -i d/a
            return RatFunc.make(_ZERO, -self.den, self.im, reduce=False)
        n = self.re * self.re + self.im * self.im
        return RatFunc.make(self.den * self.re, -(self.den * self.im), n)

    def __truediv__(self, o):
        if not isinstance(o, RatFunc):
            if not isinstance(o, _SCALARS):
                return NotImplemented
            o = RatFunc.const(o)
        if o.is_zero():
            raise DivisionByZero("division by the zero function")
        return self * o.inverse()

    def __rtruediv__(self, o):
        return RatFunc.const(o) / self

    def __pow__(self, n):
        if isinstance(n, RatFunc) and n.is_constant() and n.is_real():
            v = _const_value(n.re) / K.lc(n.den)
            if v.denominator == 1:
                n = int(v)
        if not isinstance(n, int):
            raise TypeError("only integer powers")
        if n < 0:
            return self.inverse() ** (-n)
        r, b = ONE, self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def conjugate(self):
        """Complex conjugate of the coefficients (variables treated as real)."""
        return RatFunc(self.re, -self.im, self.den)

    def __eq__(self, o):
        if not isinstance(o, RatFunc):
            try:
                o = RatFunc.const(o)
            except TypeError:
                return NotImplemented
        return self.den == o.den and self.re == o.re and self.im == o.im

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(K.terms(self.re).items()))
                              + tuple(sorted(K.terms(self.im).items()))
                              + tuple(sorted(K.terms(self.den).items())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- substitutions -----------------------------------------------------
    def shift(self, sigma, e, a, b):
        """Image under x -> u^(4e) x^((-1)^sigma), x0 -> u^(2a) x0, x1 -> u^(2b) x1."""
        d = self.degrees()
        if not d[X]:
            sigma, e = 0, 0
        if not d[X0]:
            a = 0
        if not d[X1]:
            b = 0
        if not (sigma or e or a or b):
            return self
        key = (sigma, e, a, b)
        if self._shifts is None:
            self._shifts = {}
        else:
            r = self._shifts.get(key)
            if r is not None:
                return r
        r = _monomial_map(self, sigma, 4 * e, 2 * a, 2 * b)
        self._shifts[key] = r
        return r

    def subs(self, bindings):
        """Simultaneous substitution ``{name: RatFunc}``; renormalized."""
        bound = {}
        for name, val in bindings.items():
            if name not in INDEX:
                raise KeyError(f"unknown variable {name!r}")
            bound[INDEX[name]] = RatFunc.const(val) if not isinstance(val, RatFunc) else val
        if not bound or self.is_zero():
            return self
        d = self.degrees()
        bound = {i: v for i, v in bound.items() if d[i]}
        if not bound:
            return self
        nr, ni, dn = _subs_poly_pair(self.re, self.im, bound)
        dr, di, dd = _subs_poly_pair(self.den, _ZERO, bound)
        if K.is_zero(dr) and K.is_zero(di):
            raise SubstitutionPole("denominator vanishes under substitution")
        # (nr + i ni)/dn  divided by  (dr + i di)/dd
        num = RatFunc.make(nr, ni, dn, reduce=True)
        den = RatFunc.make(dr, di, dd, reduce=True)
        return num / den

    # -- probabilistic evaluation ------------------------------------------
    def eval_mod(self, point, prime, sqrt_m1):
        """(numerator, denominator) residues at ``point`` (storage-indexed ints)."""
        n = (_eval_poly(self.re, point, prime)
             + sqrt_m1 * _eval_poly(self.im, point, prime)) % prime
        return n, _eval_poly(self.den, point, prime)

    # -- rendering -----------------------------------------------------------
    def __str__(self):
        num = _render(K.terms(self.re), K.terms(self.im))
        if K.is_one(self.den):
            return num
        dt = K.terms(self.den)
        den = _render(dt, {})
        if len(K.terms(self.re)) + len(K.terms(self.im)) > 1:
            num = f"({num})"
        if len(dt) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({self})"

    def numerator_terms(self):
        """Monomial (storage order) -> GaussianRational."""
        out = {}
        for e, c in K.terms(self.re).items():
            out[e] = GaussianRational(c, 0)
        for e, c in K.terms(self.im).items():
            out[e] = GaussianRational(out[e].re if e in out else 0, c)
        return out

    def denominator_terms(self):
        return K.terms(self.den)


def _const_value(p):
    return K.lc(p) if not K.is_zero(p) else Fraction(0)


def _lin(p, a, r, b):
    """a*p + b*r for scalars a, b."""
    out = K.scale(p, a) if a and not K.is_zero(p) else _ZERO
    if b and not K.is_zero(r):
        out = out + K.scale(r, b)
    return out


def _mul(a, b):
    if K.is_zero(a) or K.is_zero(b):
        return _ZERO
    return a * b


def _add(a, b):
    if K.is_zero(a):
        return b
    if K.is_zero(b):
        return a
    return a + b


def _sub(a, b):
    if K.is_zero(b):
        return a
    if K.is_zero(a):
        return -b
    return a - b


def _cross_im(ai, db, bi, da):
    if K.is_zero(ai):
        return bi * da if not K.is_zero(bi) else _ZERO
    if K.is_zero(bi):
        return ai * db
    return ai * db + bi * da


def _monomial_map(f, sigma, ux, u0, u1):
    """x -> u^ux x^(+-1), x0 -> u^u0 x0, x1 -> u^u1 x1 on all parts, then
    clear negative exponents and common monomial content."""
    parts = [K.raw_terms(f.re), K.raw_terms(f.im), K.raw_terms(f.den)]
    # x0, x1 exponents are unchanged, so common content there is already trivial
    mapped = native.remap(parts, U, X, X0, X1, ux, u0, u1, bool(sigma))
    re, im, den = (K.from_raw(m) for m in mapped)
    c = K.lc(den)
    if c != 1:
        c = 1 / c
        re, im, den = K.scale(re, c), K.scale(im, c), K.scale(den, c)
    return RatFunc(re, im, den)


# --- Gaussian polynomial pairs used by subs -----------------------------------


def _gmul(a, b):
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def _subs_poly_pair(pr, pi, bound):
    """Substitute into pr + i*pi; returns (re, im, common real denominator)."""
    idx = sorted(bound)
    dmax = {}
    for p in (pr, pi):
        if K.is_zero(p):
            continue
        dg = K.degrees(p)
        for i in idx:
            dmax[i] = max(dmax.get(i, 0), dg[i])
    nums = {i: (bound[i].re, bound[i].im) for i in idx}
    dens = {i: bound[i].den for i in idx}
    pw_cache = {}

    def npow(i, k):
        key = ("n", i, k)
        if key not in pw_cache:
            pw_cache[key] = (_ONE, _ZERO) if k == 0 else _gmul(npow(i, k - 1), nums[i])
        return pw_cache[key]

    def dpow(i, k):
        key = ("d", i, k)
        if key not in pw_cache:
            pw_cache[key] = _ONE if k == 0 else dpow(i, k - 1) * dens[i]
        return pw_cache[key]

    out_r, out_i = _ZERO, _ZERO
    for p, is_im in ((pr, False), (pi, True)):
        if K.is_zero(p):
            continue
        # group terms by the exponents of the bound variables
        groups = {}
        for ex, c in K.raw_terms(p).items():
            key = tuple(ex[i] for i in idx)
            rest = list(ex)
            for i in idx:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = c
        for key, rest in groups.items():
            coef = K.from_raw(rest)
            fac = (_ONE, _ZERO)
            for i, k in zip(idx, key):
                fac = _gmul(fac, npow(i, k))
                extra = dmax[i] - k
                if extra:
                    fac = (fac[0] * dpow(i, extra), fac[1] * dpow(i, extra))
            tr, ti = fac[0] * coef, fac[1] * coef
            if is_im:
                tr, ti = -ti, tr
            out_r = out_r + tr
            out_i = out_i + ti
    common = _ONE
    for i in idx:
        if dmax.get(i):
            common = common * dpow(i, dmax[i])
    return out_r, out_i, common


def _eval_poly(p, point, prime):
    return native.eval_terms(K.num_den_terms(p), point, prime)


# --- rendering ---------------------------------------------------------------


def _mono_str(ex):
    parts = []
    for name in DISPLAY:
        k = ex[INDEX[name]]
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _term_str(c, ex):
    m = _mono_str(ex)
    if not m:
        return str(c)
    if c.im == 0:
        if c.re == 1:
            return m
        if c.re == -1:
            return "-" + m
        return f"{c}*{m}"
    if c.re == 0:
        if c.im == 1:
            return "i*" + m
        if c.im == -1:
            return "-i*" + m
        return f"{c}*{m}"
    return f"({c})*{m}"


def _render(re_terms, im_terms):
    coeffs = {}
    for e, c in re_terms.items():
        coeffs[e] = GaussianRational(c, 0)
    for e, c in im_terms.items():
        coeffs[e] = GaussianRational(coeffs[e].re if e in coeffs else 0, c)
    if not coeffs:
        return "0"
    out = []
    for e in sorted(coeffs, key=grlex_key, reverse=True):
        s = _term_str(coeffs[e], e)
        if not out:
            out.append(s)
        elif s.startswith("-"):
            out.append(" - " + s[1:])
        else:
            out.append(" + " + s)
    return "".join(out)


ZERO = RatFunc(_ZERO, _ZERO, _ONE)
ONE = RatFunc(_ONE, _ZERO, _ONE)
I = RatFunc(_ZERO, _ONE, _ONE)


def var(name):
    return RatFunc.var(name)


def parse(text):
    """Parse an arithmetic expression (including the canonical rendering).

    Names: u, x, x0, x1, t0..t3, i and q (= u^4). ``^`` is a power.
    Integer literals are exact.
    """
    src = text.replace("^", "**")
    try:
        tokens = list(tokenize.generate_tokens(io.StringIO(src).readline))
    except (tokenize.TokenError, IndentationError) as ex:
        raise ValueError(f"cannot parse {text!r}") from ex
    toks = []
    for tok in tokens:
        if tok.type == tokenize.NUMBER:
            if not tok.string.isdigit():
                raise ValueError(f"non-integer literal {tok.string!r}")
            toks.extend([(tokenize.NAME, "_R"), (tokenize.OP, "("),
                         (tokenize.NUMBER, tok.string), (tokenize.OP, ")")])
        elif tok.type == tokenize.NAME and tok.string not in _NAMES:
            raise ValueError(f"unknown name {tok.string!r}")
        else:
            toks.append((tok.type, tok.string))
    code = tokenize.untokenize(toks)
    try:
        out = eval(code, {"__builtins__": {}}, dict(_NAMES))  # noqa: S307 - names are whitelisted
    except SyntaxError as ex:
        raise ValueError(f"cannot parse {text!r}") from ex
    if not isinstance(out, RatFunc):
        raise ValueError(f"{text!r} is not a rational function")
    return out


_NAMES = {name: RatFunc.var(name) for name in STORAGE}
_NAMES["i"] = I
_NAMES["q"] = RatFunc.var("u") ** 4
_NAMES["_R"] = lambda n: RatFunc.const(int(n))

assert len(STORAGE) == NVARS
