from dataclasses import dataclass
from fractions import Fraction


def _frac_str(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """Exact element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, o):
        o = _coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _coerce(o)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return _coerce(o) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o):
        o = _coerce(o)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = _coerce(o)
        n = o.norm()
        if not n:
            raise ZeroDivisionError("Gaussian division by zero")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, o):
        return _coerce(o) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{_frac_str(self.im)}*i"
        if not self.re:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{_frac_str(self.re)}{sign}{im}"


def _coerce(o):
    if isinstance(o, GaussianRational):
        return o
    if isinstance(o, complex):
        raise TypeError("floating-point complex values are not exact")
    return GaussianRational(Fraction(o), Fraction(0))


I = GaussianRational(0, 1)
