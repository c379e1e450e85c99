"""Named operators of the C^vee C_1 DAHA and its Heegaard-dual extension.

Two modes: ``generic`` keeps the four Hecke parameters t0..t3 symbolic,
``star`` fixes them at t0 = t2 = i x0, t1 = i q^(-1/2) x1, t3 = i x1.
The dual family U0, U1 (and their check versions) exists only in star mode.

Inverses are closed forms (Hecke rearrangement or explicit displays), never
computed by generic inversion.
"""

from dataclasses import dataclass
from functools import lru_cache

from .arith import I, ONE, ch, t0, t1, t2, t3, u, x, x0, x1
from .operators import D, D_INV, S, Operator

MODES = ("generic", "star")

Q = u ** 4
QH = u ** 2  # q^(1/2)

STAR_BINDINGS = {"t0": I * x0, "t1": I * x1 / u ** 2, "t2": I * x0, "t3": I * x1}

INVERTIBLE = ("T0", "T1", "T0v", "T1v", "X", "U0", "U1", "U0v", "U1v")
_U_FAMILY = ("U0", "U1", "U0v", "U1v")


class UnknownGenerator(KeyError):
    pass


@dataclass(frozen=True)
class GeneratorId:
    name: str
    mode: str = "star"
    n: int = 0
    b: int = 0
    inverse: bool = False

    def __str__(self):
        s = self.name
        if self.name in ("K", "G"):
            s = f"{self.name}({self.n},{self.b})"
        if self.inverse:
            s += "^-1"
        return f"{s}[{self.mode}]"


def params(mode):
    if mode == "generic":
        return t0, t1, t2, t3
    if mode == "star":
        return tuple(STAR_BINDINGS[k] for k in ("t0", "t1", "t2", "t3"))
    raise ValueError(f"unknown mode {mode!r}")


def _xb(b):
    if b not in (0, 1):
        raise ValueError(f"branch must be 0 or 1, got {b!r}")
    return x0 if b == 0 else x1


def _shift_b(b, p):
    return Operator.monomial(e0=p) if b == 0 else Operator.monomial(e1=p)


# --- ladder operators K_n, G_n -------------------------------------------------


@lru_cache(maxsize=None)
def _ladder(kind, n, b, arg):
    xb = _xb(b)
    up = -(xb ** (-n)) / (1 - xb ** 2)
    if kind == "K":
        down = xb ** n * (QH * arg + xb ** 2) * (u ** 6 * arg + xb ** 2) / (Q * arg * (1 - xb ** 2))
    else:
        down = xb ** n * (QH * arg + xb ** 2) * (QH + arg * xb ** 2) / (QH * arg * (1 - xb ** 2))
    return _shift_b(b, 1).scale(up) + _shift_b(b, -1).scale(down)


def K(n, b, arg=x):
    """K_n(x_b, arg): raising-type q-difference operator in x_b."""
    return _ladder("K", n, b, arg)


def G(n, b, arg=x):
    """G_n(x_b, arg)."""
    return _ladder("G", n, b, arg)


def omega(arg=x):
    return arg * (1 + QH * arg) / (QH * (1 - arg ** 2) * (1 - QH * arg))


# --- Hecke generators ------------------------------------------------------------


@lru_cache(maxsize=None)
def _T0(mode):
    if mode == "star":
        pre = I * x / (QH - x)
        return (S * D).scale(pre * -(QH + x * x0 ** 2) / (x * x0)) + Operator.mult(pre * ch(x0))
    a0, _, a2, _ = params(mode)
    r = ((1 / a0 - a0) * x ** 2 / Q + (1 / a2 - a2) * x / QH) / (1 - x ** 2 / Q)
    return (S * D).scale(1 / a0 + r) + Operator.mult(-r)


@lru_cache(maxsize=None)
def _T1(mode):
    if mode == "star":
        c = I * (1 + QH * x) * (QH * x + x1 ** 2) / (QH * (1 - x ** 2) * x1)
        return S.scale(c) + Operator.mult(-c - I * QH / x1)
    _, a1, _, a3 = params(mode)
    r = ((1 / a1 - a1) + (1 / a3 - a3) * x) / (x ** 2 - 1)
    return S.scale(1 / a1 + r) + Operator.mult(-r)


def _hecke_gap(mode, which):
    """c with T^-1 = T + c for T0 (which=0) and T1 (which=1)."""
    a = params(mode)[which]
    return a - 1 / a


@lru_cache(maxsize=None)
def _build(name, mode, inverse):
    if name in _U_FAMILY and mode != "star":
        raise UnknownGenerator(f"{name} is defined only at t_star")
    xm = Operator.mult(x)
    xinv = Operator.mult(1 / x)
    if name == "X":
        return xinv if inverse else xm
    if name == "T0":
        t = _T0(mode)
        return t + _hecke_gap(mode, 0) if inverse else t
    if name == "T1":
        t = _T1(mode)
        return t + _hecke_gap(mode, 1) if inverse else t
    if name == "T0v":
        if inverse:
            return (xinv * _T0(mode)).scale(QH)
        return (_build("T0", mode, True) * xm).scale(1 / QH)
    if name == "T1v":
        if inverse:
            return _T1(mode) * xm
        return xinv * _build("T1", mode, True)
    if name == "U0":
        return _U0_inv() if inverse else _U0()
    if name == "U1":
        return _U1_inv() if inverse else _U1()
    if name == "U0v":
        if inverse:
            return (xinv * _U0()).scale(QH)
        return (_U0_inv() * xm).scale(1 / QH)
    if name == "U1v":
        if inverse:
            return _U1() * xm
        return xinv * _U1_inv()
    raise UnknownGenerator(name)


def _U0():
    pre = x / (u * (QH - x))
    return (K(0, 0, 1 / x) * S * D).scale(pre) - G(0, 0).scale(pre)


def _U0_inv():
    pre = x / (u * (QH - x))
    return (K(0, 0, 1 / x) * S * D).scale(pre) - G(0, 0).scale(u / (QH - x))


def _U1():
    k = K(0, 1)
    first = (k * (S - 1)).scale(-x * (1 + QH * x) / (u * (1 - x ** 2)))
    second = (G(0, 1) - k.scale(QH * x)).scale(u / (1 - QH * x))
    return first + second


def _U1_inv():
    kinv = K(0, 1, 1 / x)
    first = (S + 1) * kinv.scale((QH + x) / (u * (1 - x ** 2)))
    second = (G(0, 1, x / Q).scale(x) - kinv.scale(QH)).scale(u / (QH - x))
    return (first + second) * Operator.mult((1 - x1 ** 2) / (Q - x1 ** 2))


@lru_cache(maxsize=None)
def idempotent(mode="star"):
    if mode == "star":
        c = (QH + x) * (QH + x * x1 ** 2) / ((1 - x ** 2) * (Q - x1 ** 2))
        return (S + 1) * Operator.mult(c)
    a1 = params(mode)[1]
    return (_T1(mode) + a1).scale(1 / (a1 + 1 / a1))


def W(arg=x, mode="generic"):
    a0, a1, a2, a3 = params(mode)
    num = ((1 - arg / (a1 * a3)) * (1 + a3 * arg / a1)
           * (1 - QH * arg / (a0 * a2)) * (1 + QH * a2 * arg / a0))
    return a0 * a1 * num / ((1 - arg ** 2) * (1 - Q * arg ** 2))


@lru_cache(maxsize=None)
def askey_wilson_operator(mode="generic"):
    a0, a1, _, _ = params(mode)
    return ((D - 1).scale(W(x, mode)) + (D_INV - 1).scale(W(1 / x, mode))
            + (a0 * a1 + 1 / (a0 * a1)))


def Y(mode="star"):
    return build("T1", mode) * build("T0", mode)


def Y_inv(mode="star"):
    return build("T0", mode, inverse=True) * build("T1", mode, inverse=True)


def build(name, mode="star", inverse=False, n=0, b=0):
    """Operator for a named generator.

    Names: T0 T1 T0v T1v X U0 U1 U0v U1v (invertible), Y, E (idempotent),
    K, G (with n, b), omega, W, AWop, and the skein images A_x0 A_y0 A_x1
    A_y1 A_x A_y A_ytilde.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if name in INVERTIBLE:
        return _build(name, mode, bool(inverse))
    if inverse and name != "Y":
        raise UnknownGenerator(f"{name} has no catalogued inverse")
    if name == "Y":
        return Y_inv(mode) if inverse else Y(mode)
    if name == "E":
        return idempotent(mode)
    if name == "K":
        return K(n, b)
    if name == "G":
        return G(n, b)
    if name == "omega":
        return Operator.mult(omega())
    if name == "W":
        return Operator.mult(W(x, mode))
    if name == "AWop":
        return askey_wilson_operator(mode)
    if name in SKEIN_IMAGES:
        return SKEIN_IMAGES[name]()
    raise UnknownGenerator(name)


def build_id(gid):
    return build(gid.name, gid.mode, gid.inverse, gid.n, gid.b)


# --- direct images of the skein generators --------------------------------------


@lru_cache(maxsize=None)
def A_y():
    out = Operator()
    for eps in (1, -1):
        xe = x ** eps
        shift = D if eps == 1 else D_INV
        c = -(x ** -eps) * (x0 + QH * xe / x0) * (x1 + QH * xe / x1)
        term = shift.scale(c) + QH * ch(x0) * ch(x1)
        out = out + term.scale(omega(xe))
    return out


@lru_cache(maxsize=None)
def A_ytilde():
    out = Operator()
    gg = G(0, 0) * G(0, 1)
    for eps in (1, -1):
        xe = x ** eps
        shift = D if eps == 1 else D_INV
        out = out + (K(0, 0, xe) * K(0, 1, xe) * shift - gg).scale(omega(xe))
    return out


SKEIN_IMAGES = {
    "A_x0": lambda: Operator.mult(ch(x0)),
    "A_y0": lambda: G(0, 0).scale(I / u),
    "A_x1": lambda: Operator.mult(ch(x1)),
    "A_y1": lambda: G(0, 1).scale(I / u),
    "A_x": lambda: Operator.mult(ch(x)),
    "A_y": A_y,
    "A_ytilde": A_ytilde,
}

CURVES = {"k1": "A_x0", "k2": "A_y0", "k3": "A_y", "k4": "A_y1", "k5": "A_x1", "k6": "A_ytilde"}


def build_skein_image(curve):
    """Direct q-difference form of A(k_i), i = 1..6 (k6 is y-tilde)."""
    try:
        return SKEIN_IMAGES[CURVES[curve]]()
    except KeyError:
        raise UnknownGenerator(curve) from None


def curve_k2_power(n):
    """A(k_{2,1^n}) = i q^(-(n+1)/4) G_n(x0, x)."""
    return G(n, 0).scale(I * u ** (-(n + 1)))


ONE_OP = Operator.mult(ONE)
