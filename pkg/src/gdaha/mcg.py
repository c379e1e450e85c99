"""Mapping-class-group checks on the automorphisms of the generalized DAHA."""

from functools import lru_cache

from .arith import I, u
from .generators import build, idempotent
from .operators import Operator
from .relations import Report, spherical_words
from .words import CORE, IDENTITY, Word, automorphism, ch_word, rho, word

Q = u ** 4
QH = u ** 2

BRAID_PAIRS = ((1, 2), (2, 3), (3, 4), (4, 5))
COMMUTING_PAIRS = ((1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5))

# the conjugator realized by (T1 T2 T3 T4 T5)^6
C_WORD = word(("T1", -1), "U1", "X", "T1", ("U1", -1))


def T(i):
    return automorphism(f"T{i}")


def chain(*idx):
    """T_{i1} T_{i2} ... as a composite map (rightmost acts first)."""
    out = IDENTITY
    for i in idx:
        out = out * T(i)
    return out


def agree_on(phi, psi, gens=CORE, mode="star"):
    return all(rho(phi(Word.gen(s)), mode) == rho(psi(Word.gen(s)), mode) for s in gens)


def _report(rid, ok, anchor, scope="exact", note=""):
    return Report(rid, bool(ok), None, anchor, scope, note)


def braid_checks():
    out = []
    for i, j in BRAID_PAIRS:
        a, b = T(i), T(j)
        out.append(_report(f"mcg.braid.T{i}T{j}", agree_on(a * b * a, b * a * b),
                           f"T{i} T{j} T{i} = T{j} T{i} T{j} on T0 T1 X U0 U1"))
    return out


def commutation_checks():
    out = []
    for i, j in COMMUTING_PAIRS:
        out.append(_report(f"mcg.commute.T{i}T{j}", agree_on(T(i) * T(j), T(j) * T(i)),
                           f"T{i} T{j} = T{j} T{i} on T0 T1 X U0 U1"))
    return out


def inverse_checks():
    out = []
    for name in ("T1", "T2", "T3", "T4", "T5", "Tx"):
        phi = automorphism(name)
        inv = phi.inverse()
        ok = agree_on(phi * inv, IDENTITY) and agree_on(inv * phi, IDENTITY)
        out.append(_report(f"mcg.inverse.{name}", ok, f"{name} and its inverse compose to the identity"))
    for name in ("sigma_R", "sigma_L"):
        phi = automorphism(name)
        inv = phi.inverse()
        ok = all(agree_on(p, IDENTITY, ("T0", "T1", "X"), m)
                 for p in (phi * inv, inv * phi) for m in ("star", "generic"))
        out.append(_report(f"mcg.inverse.{name}", ok, f"{name} and its inverse compose to the identity"))
    return out


def _displayed_t12345():
    w = word
    return {
        "T0": w("U0"),
        "T1": w(("U0", -1), ("T1", -1), ("X", -1), ("U1", -1), "T1", scalar=I / QH),
        "X": w(("T1", -1), ("U0", -1), "X", "T1", "U0"),
        "U0": w(("T1", -1), ("T0", -1), scalar=-I),
        "U1": w("T1"),
    }


def composite_display_checks():
    w = word
    phi = chain(1, 2, 3, 4, 5)
    disp = _displayed_t12345()
    out = [_report("mcg.display.T12345",
                   all(rho(phi(Word.gen(s))) == rho(disp[s]) for s in CORE),
                   "T1 T2 T3 T4 T5 matches its displayed action")]
    a = chain(1, 2, 3) ** 4
    disp4 = {"T0": w(("T1", -1), "T0", "T1"), "T1": w("T1"), "X": w(("T1", -1), "X", "T1"),
             "U0": w(("T1", -1), "U0", "T1"), "U1": w("U1", "X", "T1", "T1")}
    out.append(_report("mcg.display.T123_4", all(rho(a(Word.gen(s))) == rho(disp4[s]) for s in CORE),
                       "(T1 T2 T3)^4 matches its displayed action"))
    b = T(5) ** 2
    out.append(_report("mcg.display.T5_2",
                       rho(b(Word.gen("U1"))) == rho(w("U1", "X", "T1", "X", "T1", scalar=-QH))
                       and agree_on(b, IDENTITY, ("T0", "T1", "X", "U0")),
                       "T5^2 matches its displayed action"))
    return out


@lru_cache(maxsize=None)
def power_images(k, base=(1, 2, 3, 4, 5)):
    """rho(phi^k(g^{+-1})) for every core generator, phi = T_base.

    Built level by level: rho(phi^{k}(g)) is the product of the level k-1
    images over the letters of phi(g), so words are never expanded.
    """
    if k == 0:
        return {(s, sg): build(s, inverse=sg < 0) for s in CORE for sg in (1, -1)}
    prev = power_images(k - 1, base)
    phi = chain(*base)
    out = {}
    for s in CORE:
        for sg in (1, -1):
            img = phi.image(s) if sg > 0 else phi.image(s).inverse()
            out[(s, sg)] = rho_with(img, prev)
    return out


def rho_with(w, images):
    w = w.expand()
    out = Operator.identity()
    for s, k in w.factors:
        g = images[(s, 1 if k > 0 else -1)]
        for _ in range(abs(k)):
            out = out * g
    return out.scale(w.scalar)


def sixfold_checks():
    e = idempotent()
    rc = rho(C_WORD)
    out = [_report("mcg.sixfold.C_on_e", rc * e == e.scale(-1 / Q), "rho(C) e = -q^-1 e", "right-e")]
    imgs = power_images(6)
    rc_inv = rho(C_WORD.inverse())
    out.append(_report("mcg.sixfold.conjugation",
                       all(imgs[(s, 1)] == rc * build(s) * rc_inv for s in CORE),
                       "(T1..T5)^6 acts on T0 T1 X U0 U1 as conjugation by C"))
    for k, wd in spherical_words().items():
        ok = e * rho_with(wd, imgs) * e == e * rho(wd) * e
        out.append(_report(f"mcg.sixfold.{k}", ok, f"e rho(Phi(w_{k})) e = e rho(w_{k}) e", "e-sandwich"))
    return out


def three_chain_checks():
    e = idempotent()
    a = chain(1, 2, 3) ** 4
    b = T(5) ** 2
    out = []
    for k, wd in spherical_words().items():
        ok = e * ch_word(a(wd)) * e == e * ch_word(b(wd)) * e
        out.append(_report(f"mcg.three_chain.{k}", ok,
                           f"(T1 T2 T3)^4 and T5^2 agree on A({k}) in e-sandwich", "e-sandwich"))
    return out


def sigma_checks():
    sr, sl = automorphism("sigma_R"), automorphism("sigma_L")
    gens = ("T0", "T1", "X")
    out = []
    for mode in ("generic", "star"):
        out.append(_report(f"mcg.sigma.R2_Tx.{mode}", agree_on(sr ** 2, automorphism("Tx"), gens, mode),
                           "sigma_R^2 = Tx on T0 T1 X"))
        out.append(_report(f"mcg.sigma.L-2_T3.{mode}", agree_on(sl ** -2, T(3), gens, mode),
                           "sigma_L^-2 = T3 on T0 T1 X"))
    return out


def verify_mcg():
    return (braid_checks() + commutation_checks() + inverse_checks() + composite_display_checks()
            + sixfold_checks() + three_chain_checks() + sigma_checks())


# --- well-definedness ---------------------------------------------------------------

# Hecke pairs in parameter-free form: ch(c w) = ch(c' w'), the two sides are
# the two Hecke generators sharing one parameter. x0, x1 are not central once
# U0, U1 act, so the parameters cannot be held fixed under a twist.
_HECKE_PAIRS = (
    ("hecke_T0", word("T0", scalar=I), word("T0v", scalar=I), "exact"),
    ("hecke_U0", word("U0", scalar=I), word("U0v", scalar=I), "exact"),
    ("hecke_U1", word("U1", scalar=I / QH), word("U1v", scalar=I), "right-e"),
)


def _ch_image(phi, w):
    return rho(phi(w)) + rho(phi(w.inverse()))


def _t1_pair_residual(phi):
    """T1 Hecke pair with x1 eliminated: C = ch(i T1), D = ch(i T1v) commute and
    (C - q^(1/2) D)(q^(-1/2) D - C) = (q^(-1/2) - q^(1/2))^2."""
    c = _ch_image(phi, word("T1", scalar=I))
    d = _ch_image(phi, word("T1v", scalar=I))
    lhs = (c - d.scale(QH)) * (d.scale(1 / QH) - c)
    return (c * d - d * c).is_zero() and (lhs - (1 / QH - QH) ** 2).is_zero()


def well_definedness(name):
    phi = automorphism(name) if name != "id" else IDENTITY
    e = idempotent()
    out = []
    for rid, a, b, scope in _HECKE_PAIRS:
        lhs, rhs = _ch_image(phi, a), _ch_image(phi, b)
        if scope == "right-e":
            lhs, rhs = lhs * e, rhs * e
        out.append(_report(f"mcg.well_defined.{name}.{rid}", lhs == rhs,
                           f"image under {name} of the {rid[6:]} Hecke pair", scope))
    out.append(_report(f"mcg.well_defined.{name}.hecke_T1", _t1_pair_residual(phi),
                       f"image under {name} of the T1 Hecke pair (x1 eliminated)"))
    lhs = rho(phi(word("T0", ("U0", -1), "X", ("T0", -1), "U0")))
    out.append(_report(f"mcg.well_defined.{name}.T0_U0_X", lhs == Operator.mult(-Q),
                       f"image under {name} of T0 U0^-1 X T0^-1 U0 = -q"))
    lhs = rho(phi(word("U1", ("T1", -1), ("X", -1), ("U1", -1), "T1")))
    out.append(_report(f"mcg.well_defined.{name}.U1_T1_X_e", lhs * e == e.scale(-Q),
                       f"image under {name} of U1 T1^-1 X^-1 U1^-1 T1 e = -q e", "right-e"))
    return out


# T4 moves T1 and does not preserve e; the T1 Hecke pair fails exactly under
# it and is reported as such.
KNOWN_FAILURES = frozenset({"mcg.well_defined.T4.hecke_T1"})


def verify_well_definedness():
    out = []
    for name in ("id", "T1", "T2", "T3", "T4", "T5", "Tx"):
        out += well_definedness(name)
    return out
