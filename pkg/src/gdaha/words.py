"""Words in the abstract generators, the representation rho, and automorphisms."""

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import I, ONE, RatFunc, parse, u
from .generators import build
from .operators import Operator

CORE = ("T0", "T1", "X", "U0", "U1")
SYMBOLS = CORE + ("T0v", "T1v", "U0v", "U1v")


class Word:
    """scalar * g1^k1 g2^k2 ... with adjacent equal symbols merged."""

    __slots__ = ("scalar", "factors")

    def __init__(self, factors=(), scalar=ONE):
        if not isinstance(scalar, RatFunc):
            scalar = RatFunc.const(scalar)
        out = []
        for sym, k in factors:
            if sym not in SYMBOLS:
                raise ValueError(f"unknown generator symbol {sym!r}")
            if out and out[-1][0] == sym:
                k += out.pop()[1]
            if k:
                out.append((sym, k))
        self.scalar = scalar
        self.factors = tuple(out)

    @classmethod
    def gen(cls, sym, k=1):
        return cls(((sym, k),))

    def __mul__(self, o):
        if isinstance(o, Word):
            return Word(self.factors + o.factors, self.scalar * o.scalar)
        return Word(self.factors, self.scalar * o)

    def __rmul__(self, c):
        return Word(self.factors, self.scalar * c)

    def inverse(self):
        return Word(tuple((s, -k) for s, k in reversed(self.factors)), self.scalar.inverse())

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(n)):
            out = out * base
        return out

    def expand(self):
        """Rewrite the check symbols through T0, T1, X, U0, U1."""
        out = Word((), self.scalar)
        for sym, k in self.factors:
            if sym in _DERIVED:
                d = _DERIVED[sym]
                out = out * (d ** k)
            else:
                out = out * Word.gen(sym, k)
        return out

    def length(self):
        return sum(abs(k) for _, k in self.factors)

    def __eq__(self, o):
        return isinstance(o, Word) and self.factors == o.factors and self.scalar == o.scalar

    def __hash__(self):
        return hash((self.factors, self.scalar))

    def __str__(self):
        body = " ".join(s if k == 1 else f"{s}^{k}" for s, k in self.factors)
        if self.scalar.is_one():
            return body or "1"
        return f"({self.scalar}) {body}".rstrip()

    __repr__ = __str__


def word(*items, scalar=ONE):
    """word("U1", ("T0", -1), "X") -> U1 T0^-1 X"""
    return Word(tuple((it, 1) if isinstance(it, str) else it for it in items), scalar)


def parse_word(text):
    """'U1 T0^-1 X' -> word; an optional leading scalar goes in brackets: '[i/u] T0'."""
    text = text.strip()
    scalar = ONE
    if text.startswith("["):
        end = text.index("]")
        scalar = parse(text[1:end])
        text = text[end + 1:]
    items = []
    for tok in text.split():
        sym, _, k = tok.partition("^")
        if sym not in SYMBOLS:
            raise ValueError(f"unknown generator {sym!r}")
        items.append((sym, int(k) if k else 1))
    return word(*items, scalar=scalar)


_DERIVED = {
    "T0v": Word((("T0", -1), ("X", 1)), u ** -2),
    "T1v": Word((("X", -1), ("T1", -1))),
    "U0v": Word((("U0", -1), ("X", 1)), u ** -2),
    "U1v": Word((("X", -1), ("U1", -1))),
}


def word_inv(w):
    return w.inverse()


# --- representation ---------------------------------------------------------------


def _gen_power(sym, k, mode):
    g = build(sym, mode, inverse=k < 0)
    out = g
    for _ in range(abs(k) - 1):
        out = out * g
    return out


@lru_cache(maxsize=4096)
def _rho_factors(factors, mode):
    if not factors:
        return Operator.identity()
    if len(factors) == 1:
        return _gen_power(factors[0][0], factors[0][1], mode)
    mid = len(factors) // 2
    return _rho_factors(factors[:mid], mode) * _rho_factors(factors[mid:], mode)


def rho(w, mode="star"):
    w = w.expand()
    return _rho_factors(w.factors, mode).scale(w.scalar)


def ch_word(w, mode="star"):
    return rho(w, mode) + rho(w.inverse(), mode)


# --- automorphisms -----------------------------------------------------------------


@dataclass(frozen=True)
class Automorphism:
    name: str
    images: dict = field(default_factory=dict)
    inverse_images: dict = field(default_factory=dict)

    def image(self, sym):
        return self.images.get(sym, Word.gen(sym))

    def inverse(self):
        name = self.name[:-3] if self.name.endswith("^-1") else self.name + "^-1"
        return Automorphism(name, self.inverse_images, self.images)

    def __call__(self, w):
        return auto_apply(self, w)

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = auto_compose(out, base)
        return out

    def __mul__(self, o):
        return auto_compose(self, o)


def auto_apply(phi, w):
    w = w.expand()
    out = Word((), w.scalar)
    for sym, k in w.factors:
        img = phi.image(sym)
        out = out * (img ** k)
    return out


def auto_compose(phi, psi):
    """phi o psi: psi acts first on generators, then phi on the result."""
    inv_phi, inv_psi = phi.inverse(), psi.inverse()
    images = {g: auto_apply(phi, psi.image(g)) for g in CORE}
    inverse_images = {g: auto_apply(inv_psi, inv_phi.image(g)) for g in CORE}
    return Automorphism(f"{phi.name}*{psi.name}", images, inverse_images)


IDENTITY = Automorphism("id")


def _w(*items, scalar=ONE):
    return word(*items, scalar=scalar)


_T0T1_INV = _w(("T1", -1), ("T0", -1))

AUTOMORPHISMS = {
    "T1": Automorphism(
        "T1",
        {"U0": _w("U0", ("T0", -1), scalar=-I * u)},
        {"U0": _w("U0", "T0", scalar=I / u)},
    ),
    "T2": Automorphism(
        "T2",
        {"T0": _w("U0", "T0", scalar=I / u)},
        {"T0": _w(("U0", -1), "T0", scalar=-I * u)},
    ),
    "T3": Automorphism(
        "T3",
        {
            "X": _T0T1_INV * _w("X", "T1", "T0"),
            "U0": _T0T1_INV * _w("U0", scalar=1 / u),
            "U1": _w("U1", "T0", "T1", scalar=u),
        },
        {
            "X": _w("T0", "T1", "X", ("T0", -1), ("T1", -1)),
            "U0": _w("T0", "T1", "U0", scalar=u),
            "U1": _w("U1", ("T1", -1), ("T0", -1), scalar=1 / u),
        },
    ),
    "T4": Automorphism(
        "T4",
        {"T1": _w(("X", -1), ("U1", -1), "T1", scalar=I / u)},
        {"T1": _w("U1", "X", "T1", scalar=-I * u)},
    ),
    "T5": Automorphism(
        "T5",
        {"U1": _w("U1", "X", "T1", scalar=-I * u)},
        {"U1": _w("U1", ("T1", -1), ("X", -1), scalar=I / u)},
    ),
    "Tx": Automorphism(
        "Tx",
        {"T0": _w("X", "T0", ("X", -1)), "U0": _w("X", "U0", ("X", -1))},
        {"T0": _w(("X", -1), "T0", "X"), "U0": _w(("X", -1), "U0", "X")},
    ),
    "sigma_R": Automorphism(
        "sigma_R",
        {"T0": _w("X", ("T0", -1), scalar=u ** -2)},
        {"T0": _w(("T0", -1), "X", scalar=u ** -2)},
    ),
    "sigma_L": Automorphism(
        "sigma_L",
        {"X": _w("T0", ("X", -1), ("T1", -1), scalar=u ** 2)},
        {"X": _w(("T1", -1), ("X", -1), "T0", scalar=u ** 2)},
    ),
}
AUTOMORPHISMS["Ty"] = Automorphism("Ty", AUTOMORPHISMS["T3"].images, AUTOMORPHISMS["T3"].inverse_images)


def automorphism(name):
    """Builtin automorphism by name; a trailing ^-1 selects the inverse."""
    if name.endswith("^-1"):
        return automorphism(name[:-3]).inverse()
    try:
        return AUTOMORPHISMS[name]
    except KeyError:
        raise KeyError(f"unknown automorphism {name!r}") from None
