"""Catalogue of exact operator identities.

Every entry produces a pair (lhs, rhs) of Operators. ``right-e`` entries are
compared after composing both sides with the idempotent e on the right.
Checks are grouped so that expensive shared work (memoized inside a
process) is computed once per group.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import I, ch, u, x, x0, x1
from .generators import (
    A_y,
    A_ytilde,
    G,
    K,
    STAR_BINDINGS,
    askey_wilson_operator,
    build,
    build_skein_image,
    curve_k2_power,
    idempotent,
    omega,
    params,
)
from .operators import D, D_INV, S, Operator
from .words import ch_word, rho, word

Q = u ** 4
QH = u ** 2

SUITES = ("hecke", "gk", "dual", "images", "curves", "aw", "mcg", "tangles")


class UnknownRelation(KeyError):
    pass


@dataclass(frozen=True)
class Relation:
    id: str
    suite: str
    anchor: str
    scope: str  # "exact" or "right-e"
    pair: object = field(compare=False, repr=False)
    mode: str = "star"
    group: str = ""

    def sides(self):
        lhs, rhs = self.pair()
        if not isinstance(lhs, Operator):
            lhs = Operator.mult(lhs)
        if not isinstance(rhs, Operator):
            rhs = Operator.mult(rhs)
        if self.scope == "right-e":
            e = idempotent(self.mode)
            lhs, rhs = lhs * e, rhs * e
        return lhs, rhs


@dataclass
class Report:
    id: str
    passed: bool
    residual: object = None
    anchor: str = ""
    scope: str = "exact"
    note: str = ""

    def summary(self):
        r = self.residual
        if r is None:
            return "0" if self.passed else "?"
        if isinstance(r, Operator):
            return "0" if r.is_zero() else f"{len(r.terms)} term(s), size {r.size()}"
        return str(r)


def verify_relation(rel, mode="exact", seed=0):
    """Normalize lhs - rhs. In fast mode a modular probe screens first and
    the exact comparison still decides the result."""
    if isinstance(rel, str):
        rel = relation(rel)
    lhs, rhs = rel.sides()
    if mode == "fast" and not lhs.probe_eq(rhs, seed=seed):
        return Report(rel.id, False, lhs - rhs, rel.anchor, rel.scope, "probe: differs")
    residual = lhs - rhs
    return Report(rel.id, residual.is_zero(), residual, rel.anchor, rel.scope)


def _m(f):
    return Operator.mult(f)


def _sum_eps(term):
    """sum over eps = +-1 of omega(x^eps) * term(x^eps, D^eps)."""
    out = Operator()
    for eps in (1, -1):
        xe = x ** eps
        out = out + term(xe, D if eps == 1 else D_INV).scale(omega(xe))
    return out


# --- Hecke layer -------------------------------------------------------------------


def _hecke(mode):
    a0, a1, a2, a3 = params(mode)
    out = []
    for name, t in (("T0", a0), ("T1", a1), ("T0v", a2), ("T1v", a3)):
        out.append(Relation(
            f"hecke.{mode}.{name}", "hecke", f"{name} - {name}^-1 = t^-1 - t", "exact",
            lambda n=name, t=t: (build(n, mode) - build(n, mode, True), 1 / t - t), mode))
    out += [
        Relation(f"hecke.{mode}.prod_TTTT", "hecke", "T1v T1 T0 T0v = q^(-1/2)", "exact",
                 lambda: (build("T1v", mode) * build("T1", mode) * build("T0", mode)
                          * build("T0v", mode), 1 / QH), mode),
        Relation(f"hecke.{mode}.X_from_T0", "hecke", "q^(1/2) T0 T0v = X", "exact",
                 lambda: ((build("T0", mode) * build("T0v", mode)).scale(QH), x), mode),
        Relation(f"hecke.{mode}.X_from_T1", "hecke", "(T1v T1)^-1 = X", "exact",
                 lambda: (build("T1", mode, True) * build("T1v", mode, True), x), mode),
        Relation(f"hecke.{mode}.e_idempotent", "hecke", "e e = e", "exact",
                 lambda: (idempotent(mode) * idempotent(mode), idempotent(mode)), mode),
        Relation(f"hecke.{mode}.e_s_invariant", "hecke", "s e = e", "exact",
                 lambda: (S * idempotent(mode), idempotent(mode)), mode),
    ]
    for name in ("T0", "T1", "T0v", "T1v", "X"):
        out.append(Relation(
            f"hecke.{mode}.inverse.{name}", "hecke", f"{name} {name}^-1 = 1", "exact",
            lambda n=name: (build(n, mode) * build(n, mode, True), 1), mode))
    if mode == "star":
        for name in ("T0", "T1", "T0v", "T1v"):
            out.append(Relation(
                f"hecke.specialize.{name}", "hecke", f"generic {name} at t_star = starred {name}",
                "exact", lambda n=name: (build(n, "generic").subst_params(STAR_BINDINGS), build(n)), mode))
        out.append(Relation(
            "hecke.specialize.E", "hecke", "generic e at t_star = starred e", "exact",
            lambda: (idempotent("generic").subst_params(STAR_BINDINGS), idempotent("star"))))
    return out


# --- K/G ladder identities ---------------------------------------------------------


def _gk(n, b):
    xb = (x0, x1)[b]
    tag = f"n{n}.b{b}"

    def quartic():
        lhs = ((G(n, b) * G(n, b, x / Q) - K(n, b) * K(n, b, 1 / x)).scale(QH * x * (1 - x ** 2))
               + ((K(n, b) - K(n, b, 1 / x)) * G(n, b, x / Q)).scale((1 - Q) * x ** 2))
        rhs = QH ** n * (QH - x) * (1 - QH * x) * (1 - x ** 2) * (Q - xb ** 2) / (1 - xb ** 2)
        return lhs, rhs

    pre = 1 / (x - QH)
    return [
        Relation(f"gk.symmetric.{tag}", "gk", "G_n(x_b, 1/x) = G_n(x_b, x)", "exact",
                 lambda: (G(n, b, 1 / x), G(n, b))),
        Relation(f"gk.intertwine.{tag}", "gk", "K_n(x_b,x) G_n(x_b,qx) = G_n(x_b,x) K_n(x_b,x)", "exact",
                 lambda: (K(n, b) * G(n, b, Q * x), G(n, b) * K(n, b))),
        Relation(f"gk.quadratic.{tag}", "gk",
                 "K_n(x_b,1/x) K_n(x_b,x/q) - G_n^2 = -q^(n/2) x^-1 (q^(1/2)-x)^2", "exact",
                 lambda: (K(n, b, 1 / x) * K(n, b, x / Q) - G(n, b) * G(n, b),
                          -QH ** n / x * (QH - x) ** 2)),
        Relation(f"gk.quartic.{tag}", "gk", "mixed GG - KK identity with (q - x_b^2) right side",
                 "exact", quartic),
        Relation(f"gk.recursion_K.{tag}", "gk", "K_{n+1}(x_b,1/x) from the 2x2 ladder step", "exact",
                 lambda: (K(n + 1, b, 1 / x),
                          (K(n, b, 1 / x).scale(x * ch(xb))
                           - G(n, b, x / Q).scale((QH + x * xb ** 2) / xb)).scale(pre))),
        Relation(f"gk.recursion_G.{tag}", "gk", "G_{n+1}(x_b,x/q) from the 2x2 ladder step", "exact",
                 lambda: (G(n + 1, b, x / Q),
                          (K(n, b, 1 / x).scale((x + QH * xb ** 2) / xb)
                           - G(n, b, x / Q).scale(QH * ch(xb))).scale(pre))),
    ]


# --- dual (U) layer ------------------------------------------------------------------


def _dual():
    B = build
    e_coeff = (1 - Q) * (1 + QH * x) * (QH * x + x1 ** 2) / ((1 - x ** 2) * (Q - x1 ** 2))
    one = Operator.identity()
    X = B("X")
    rels = [
        Relation("dual.prod_UUUU", "dual", "U1v U1 U0 U0v = q^(-1/2)", "exact",
                 lambda: (B("U1v") * B("U1") * B("U0") * B("U0v"), 1 / QH)),
        Relation("dual.U0_T0_U0v", "dual", "U0 T0 U0v = -q^(1/2) T0", "exact",
                 lambda: (B("U0") * B("T0") * B("U0v"), B("T0").scale(-QH))),
        Relation("dual.U1_T1_U1v_T1", "dual", "U1 T1^-1 U1v T1 = -q - (1-q)(...)(s-1)", "exact",
                 lambda: (B("U1") * B("T1", inverse=True) * B("U1v") * B("T1"),
                          Operator.mult(-Q) - (S - 1).scale(e_coeff))),
        Relation("dual.U0_hecke", "dual", "U0 - U0^-1 = q^(-1/4) G_0(x0,x)", "exact",
                 lambda: (B("U0") - B("U0", inverse=True), G(0, 0).scale(1 / u))),
        Relation("dual.U0v_hecke", "dual", "U0v - U0v^-1 = q^(-1/4) G_0(x0,x)", "exact",
                 lambda: (B("U0v") - B("U0v", inverse=True), G(0, 0).scale(1 / u))),
        Relation("dual.U1_hecke_e", "dual", "(q^(-1/2) U1 - q^(1/2) U1^-1) e = q^(-1/4) G_0(x1,x) e",
                 "right-e", lambda: (B("U1").scale(1 / QH) - B("U1", inverse=True).scale(QH),
                                     G(0, 1).scale(1 / u))),
        Relation("dual.U1v_hecke_e", "dual", "(U1v - U1v^-1) e = q^(-1/4) G_0(x1,x) e", "right-e",
                 lambda: (B("U1v") - B("U1v", inverse=True), G(0, 1).scale(1 / u))),
        Relation("dual.T1_e.left", "dual", "T1 e = -i q^(1/2) x1^-1 e", "exact",
                 lambda: (B("T1") * idempotent(), idempotent().scale(-I * QH / x1))),
        Relation("dual.T1_e.right", "dual", "e T1 = -i q^(1/2) x1^-1 e", "exact",
                 lambda: (idempotent() * B("T1"), idempotent().scale(-I * QH / x1))),
        Relation("dual.T1inv_e.left", "dual", "T1^-1 e = i q^(-1/2) x1 e", "exact",
                 lambda: (B("T1", inverse=True) * idempotent(), idempotent().scale(I * x1 / QH))),
        Relation("dual.T1inv_e.right", "dual", "e T1^-1 = i q^(-1/2) x1 e", "exact",
                 lambda: (idempotent() * B("T1", inverse=True), idempotent().scale(I * x1 / QH))),
        Relation("dual.X_T1_X", "dual", "X T1 (1 + q^(1/2) X) e = q^(1/2) (1 + q^(1/2) X) T1^-1 e",
                 "right-e", lambda: (X * B("T1") * (one + X.scale(QH)),
                                     (one + X.scale(QH)) * B("T1", inverse=True).scale(QH))),
        Relation("dual.X_U1_X", "dual", "X U1 (1 + q^(1/2) X) e = q^(1/2) (1 + q^(1/2) X) U1^-1 e",
                 "right-e", lambda: (X * B("U1") * (one + X.scale(QH)),
                                     (one + X.scale(QH)) * B("U1", inverse=True).scale(QH))),
        Relation("dual.presentation.T0_U0_X", "dual", "T0 U0^-1 X T0^-1 U0 = -q", "exact",
                 lambda: (rho(word("T0", ("U0", -1), "X", ("T0", -1), "U0")), -Q)),
        Relation("dual.presentation.U1_T1_X_e", "dual", "U1 T1^-1 X^-1 U1^-1 T1 e = -q e", "right-e",
                 lambda: (rho(word("U1", ("T1", -1), ("X", -1), ("U1", -1), "T1")), -Q)),
    ]
    for name in ("U0", "U1", "U0v", "U1v"):
        rels.append(Relation(f"dual.inverse.{name}", "dual", f"{name} {name}^-1 = 1", "exact",
                             lambda n=name: (B(n) * B(n, inverse=True), 1)))
        rels.append(Relation(f"dual.inverse_left.{name}", "dual", f"{name}^-1 {name} = 1", "exact",
                             lambda n=name: (B(n, inverse=True) * B(n), 1)))
    return rels


# --- images of skein generators ----------------------------------------------------------


def _images():
    w = word
    rels = [
        Relation("images.k1.T0", "images", "ch(i T0) = ch(x0)", "exact",
                 lambda: (ch_word(w("T0", scalar=I)), build_skein_image("k1"))),
        Relation("images.k1.T0v", "images", "ch(i T0v) = ch(x0)", "exact",
                 lambda: (ch_word(w("T0v", scalar=I)), build_skein_image("k1"))),
        Relation("images.k2.U0", "images", "ch(i U0) = i q^(-1/4) G_0(x0,x)", "exact",
                 lambda: (ch_word(w("U0", scalar=I)), build_skein_image("k2"))),
        Relation("images.k2.U0v", "images", "ch(i U0v) = i q^(-1/4) G_0(x0,x)", "exact",
                 lambda: (ch_word(w("U0v", scalar=I)), build_skein_image("k2"))),
        Relation("images.k3.T1T0", "images", "ch(T1 T0) e = A(y) e", "right-e",
                 lambda: (ch_word(w("T1", "T0")), build_skein_image("k3"))),
        Relation("images.k3.T0T1", "images", "ch(T0 T1) e = A(y) e", "right-e",
                 lambda: (ch_word(w("T0", "T1")), build_skein_image("k3"))),
        Relation("images.k4.U1", "images", "ch(i q^(-1/2) U1) e = i q^(-1/4) G_0(x1,x) e", "right-e",
                 lambda: (ch_word(w("U1", scalar=I / QH)), build_skein_image("k4"))),
        Relation("images.k4.U1v", "images", "ch(i U1v) e = i q^(-1/4) G_0(x1,x) e", "right-e",
                 lambda: (ch_word(w("U1v", scalar=I)), build_skein_image("k4"))),
        Relation("images.k5.T1", "images", "ch(i q^(-1/2) T1) e = ch(x1) e", "right-e",
                 lambda: (ch_word(w("T1", scalar=I / QH)), build_skein_image("k5"))),
        Relation("images.k5.T1v", "images", "ch(i T1v) e = ch(x1) e", "right-e",
                 lambda: (ch_word(w("T1v", scalar=I)), build_skein_image("k5"))),
        Relation("images.k6.U1U0", "images", "ch(U1 U0) e = A(y~) e", "right-e",
                 lambda: (ch_word(w("U1", "U0")), build_skein_image("k6"))),
        Relation("images.commute_y_ytilde", "images", "A(y) A(y~) = A(y~) A(y)", "exact",
                 lambda: (A_y() * A_ytilde(), A_ytilde() * A_y())),
        Relation("images.aw_operator.generic", "images", "ch(Y) e = Askey-Wilson operator e (generic t)",
                 "right-e", lambda: (ch_word(w("T1", "T0"), "generic"), askey_wilson_operator("generic")),
                 "generic"),
        Relation("images.aw_operator.star", "images", "ch(Y) e = Askey-Wilson operator e (t_star)",
                 "right-e", lambda: (ch_word(w("T1", "T0")), askey_wilson_operator("star"))),
        Relation("images.k2_power.n0", "images", "A(k_{2,1^0}) = A(k2)", "exact",
                 lambda: (curve_k2_power(0), build_skein_image("k2"))),
    ]
    k1 = build_skein_image("k1")
    for n in range(-2, 3):
        rels.append(Relation(
            f"images.skein_three_term.n{n}", "images",
            "A(k1) A(k_{2,1^n}) = q^(-1/4) A(k_{2,1^(n-1)}) + q^(1/4) A(k_{2,1^(n+1)})", "exact",
            lambda n=n: (k1 * curve_k2_power(n),
                         curve_k2_power(n - 1).scale(1 / u) + curve_k2_power(n + 1).scale(u))))

    def commutator(sign):
        a1, a2 = build_skein_image("k1"), build_skein_image("k2")
        # A = q^(-1/4); (A^(+-1) x y - A^(-+1) y x) / (A^(+-2) - A^(-+2)) = D_x^(-+1)(y)
        A = u ** -sign
        lhs = ((a1 * a2).scale(A) - (a2 * a1).scale(1 / A)).scale(1 / (A ** 2 - A ** -2))
        return lhs, curve_k2_power(-sign)

    rels += [
        Relation("images.dehn_commutator.plus", "images",
                 "(A x y - A^-1 y x)/(A^2 - A^-2) = k_{2,1^-1}, A = q^(-1/4)", "exact",
                 lambda: commutator(1)),
        Relation("images.dehn_commutator.minus", "images",
                 "(A^-1 x y - A y x)/(A^-2 - A^2) = k_{2,1}, A = q^(-1/4)", "exact",
                 lambda: commutator(-1)),
    ]
    return rels


# --- curve table -------------------------------------------------------------------------


def _explicit_forms():
    m = _m
    return {
        "k12": lambda: G(-1, 0).scale(I),
        "k23": lambda: _sum_eps(lambda xe, d: -(K(1, 0, xe) * m((x1 ** 2 + QH * xe) / x1) * d)
                                + G(1, 0) * m(ch(x1))).scale(I),
        "k34": lambda: _sum_eps(lambda xe, d: -(m((x0 ** 2 / xe + QH) / x0) * K(-1, 1, xe) * d)
                                + m(QH * ch(x0)) * G(-1, 1)).scale(I),
        "k45": lambda: G(1, 1).scale(I / QH),
        "k56": lambda: _sum_eps(lambda xe, d: K(0, 0, xe) * K(-1, 1, xe) * d - G(0, 0) * G(-1, 1)).scale(u),
        "k61": lambda: _sum_eps(lambda xe, d: K(1, 0, xe) * K(0, 1, xe) * d - G(1, 0) * G(0, 1)).scale(1 / u),
        "k123": lambda: _sum_eps(lambda xe, d: -(K(0, 0, xe) * m((x1 ** 2 + QH * xe) / x1) * d)
                                 + G(0, 0) * m(ch(x1))).scale(I * u),
        "k543": lambda: _sum_eps(lambda xe, d: -(m((x0 ** 2 + QH * xe) / x0) * K(0, 1, xe) * d)
                                 + m(ch(x0)) * G(0, 1)).scale(I * u),
        "k234": lambda: _sum_eps(lambda xe, d: K(1, 0, xe) * K(-1, 1, xe) * d - G(1, 0) * G(-1, 1)),
        "k345": lambda: _sum_eps(lambda xe, d: -(m((x0 ** 2 / (QH * xe) + 1) / x0) * K(0, 1, xe) * d)
                                 + m(ch(x0)) * G(0, 1)).scale(I * u),
        "k321": lambda: _sum_eps(lambda xe, d: -(K(0, 0, xe) * m((x1 ** 2 / (QH * xe) + 1) / x1) * d)
                                 + G(0, 0) * m(ch(x1))).scale(I * u),
    }


def _curve_words():
    """Word forms per curve: (label, word). The automorphism-derived form is
    produced separately by applying the twist to the base curve word."""
    w = word
    return {
        "k12": [("a", w("U0", "T0", scalar=-1 / u)), ("b", w(("X", -1), "U0", "T0", scalar=u))],
        "k23": [("a", w(("T1", -1), ("T0", -1), "U0", scalar=I / u)),
                ("b", w(("T0", -1), ("T1", -1), ("X", -1), "U0", scalar=-I * u))],
        "k34": [("a", w("U1", ("T1", -1), ("T0", -1), scalar=I / u ** 3)),
                ("b", w("U1", "X", ("T0", -1), ("T1", -1), scalar=-I / u))],
        "k45": [("a", w("U1", "X", "T1", scalar=1 / u)), ("b", w("U1", "X", "T1", "X", scalar=-u))],
        "k56": [("a", w("U1", ("T1", -1), ("X", -1), "U0", scalar=I / u))],
        "k61": [("a", w("U1", "U0", ("T0", -1), scalar=-I * u))],
        "k123": [("a", w(("T1", -1), ("X", -1), "U0", scalar=QH)),
                 ("b", w(("T0", -1), ("T1", -1), ("X", -1), "U0", "T0"))],
        # the second prefactor is -q^(-1/2); it is what T5^-1 T3 produces from k4
        "k543": [("a", w("U1", "T0")), ("b", w("U1", ("T1", -1), ("X", -1), "T0", "T1", scalar=-1 / QH))],
        "k234": [("a", w("U1", ("T1", -1), ("T0", -1), "U0", scalar=-1 / Q)),
                 ("b", w("U1", "U0", ("T0", -1), ("T1", -1), scalar=-QH))],
        "k345": [("a", w("U1", "X", ("T0", -1), scalar=1 / QH)),
                 ("b", w("U1", "X", "T1", "X", ("T0", -1), ("T1", -1), scalar=-1))],
        "k321": [("a", w("T1", "U0")), ("b", w("U0", "T1"))],
    }


# curve -> (automorphism names applied right-to-left, base curve)
CURVE_TWISTS = {
    "k12": (("T2",), "k1"),
    "k23": (("T3",), "k2"),
    "k34": (("T3^-1",), "k4"),
    "k45": (("T5",), "k4"),
    "k56": (("T5^-1",), "k6"),
    "k61": (("T1",), "k6"),
    "k123": (("T3", "T2"), "k1"),
    "k543": (("T5^-1", "T3"), "k4"),
    "k234": (("T2^-1", "T3^-1"), "k4"),
    "k345": (("T5", "T3^-1"), "k4"),
    "k321": (("T1", "T2"), "k3"),
}

CURVE_IDS = tuple(CURVE_TWISTS)


def spherical_words():
    """ch-argument words w_i with A(k_i) e = ch(w_i) e."""
    w = word
    return {
        "k1": w("T0", scalar=I), "k2": w("U0", scalar=I), "k3": w("T1", "T0"),
        "k4": w("U1", scalar=I / QH), "k5": w("T1", scalar=I / QH), "k6": w("U1", "U0"),
    }


def twisted_word(curve):
    from .words import automorphism

    names, base = CURVE_TWISTS[curve]
    out = spherical_words()[base]
    for name in reversed(names):
        out = automorphism(name)(out)
    return out


@lru_cache(maxsize=None)
def curve_explicit(curve):
    """Explicit q-difference form of A(curve) displayed next to its words."""
    return _explicit_forms()[curve]()


def _curves():
    rels = []
    words = _curve_words()
    for c in CURVE_IDS:
        scope = "exact" if c == "k12" else "right-e"
        for label, wd in words[c]:
            rels.append(Relation(f"curves.{c}.{label}", "curves",
                                 f"ch({wd}) = explicit form of A({c})", scope,
                                 lambda wd=wd, c=c: (ch_word(wd), curve_explicit(c)), group=f"curves.{c}"))
        names, base = CURVE_TWISTS[c]
        rels.append(Relation(f"curves.{c}.twist", "curves",
                             f"{' '.join(names)} applied to A({base}) = explicit form of A({c})", scope,
                             lambda c=c: (ch_word(twisted_word(c)), curve_explicit(c)), group=f"curves.{c}"))
    return rels


def verify_curve_table(mode="exact"):
    return [verify_relation(r, mode) for r in _curves()]


# --- assembly -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def catalogue():
    rels = _hecke("generic") + _hecke("star")
    for n in range(-2, 3):
        for b in (0, 1):
            rels += _gk(n, b)
    rels += _dual() + _images() + _curves()
    ids = [r.id for r in rels]
    assert len(ids) == len(set(ids)), "duplicate relation id"
    return tuple(sorted(rels, key=lambda r: r.id))


def relation(rid):
    for r in catalogue():
        if r.id == rid:
            return r
    raise UnknownRelation(rid)


def manifest():
    return [{"id": r.id, "suite": r.suite, "anchor": r.anchor, "scope": r.scope,
             "mode": r.mode, "expected_residual": "0"} for r in catalogue()]
