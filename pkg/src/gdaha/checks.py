"""Verification suites: every check as a record, scheduled over a worker pool.

Checks are grouped into units (one call each) so that per-process caches are
shared inside a unit. Records are sorted by id before they are reported, so
the output does not depend on how many workers ran them.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor

from . import askey_wilson as aw
from . import mcg, relations, tangles
from .relations import Report

SUITES = relations.SUITES
WORKERS_ENV = "GDAHA_WORKERS"


def default_workers():
    v = os.environ.get(WORKERS_ENV)
    if v:
        n = int(v)
        if n < 1:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer")
        return n
    return os.cpu_count() or 1


# --- units --------------------------------------------------------------------------


def _relation_unit(suite, mode, seed):
    return [relations.verify_relation(r, mode, seed) for r in relations.catalogue() if r.suite == suite]


def _aw_unit(mode, seed):
    out = []
    for m in range(5):
        out.append(aw.verify_eigen(m, "generic"))
        out.append(aw.verify_eigen(m, "star"))
        out.append(aw.verify_eigen_star(m))
        p = aw.aw_poly(m, "generic").value
        out.append(Report(f"aw.symmetric.m{m}", aw.is_symmetric(p), None,
                          "P_m is invariant under x -> 1/x"))
        out.append(Report(f"aw.specialize.m{m}", aw.star_by_substitution(m) == aw.aw_poly(m, "star").value,
                          None, "P_m at t_star equals P_m computed with t_star parameters"))
    for m in range(4):
        out.append(aw.verify_three_term(m))
    return out


def _tangle_words_unit(mode, seed):
    out = []
    for r, (p, q), entries, tw in (("5/2", (5, 2), (2, 2), "Dy^1 Dx^-1"),
                                   ("7/2", (7, 2), (4, -2), "Dy^-1 Dx^-2")):
        cf = tangles.cf_expand(p, q)
        got = str(tangles.tangle_twistword(cf))
        out.append(Report(f"tangles.twist.{r}", cf.entries == entries and got == tw and cf.evaluate() == cf.value,
                          got, f"{r} = {entries} gives the twist word {tw}"))
    try:
        tangles.cf_expand(1, 2)
        ok = False
    except tangles.NoEvenExpansion:
        ok = True
    out.append(Report("tangles.twist.1/2", ok, None, "1/2 has no all-even expansion"))
    return out


def _anchor_unit(r, mode, seed):
    p, q = tangles.parse_rational(r)
    gen = tangles.tangle_chword(tangles.cf_expand(p, q))
    disp = tangles.display_word(r)
    anchor = f"rho of the generated {r} word equals rho of the displayed {r} word"
    if gen.expand() == disp.expand():
        return [Report(f"tangles.anchor.{r}", True, None, anchor, note="identical words")]
    if mode == "fast" and not tangles.screen_rho_equal(gen, disp, seed=seed):
        return [Report(f"tangles.anchor.{r}", False, None, anchor, note="screen: differs")]
    from .words import rho

    return [Report(f"tangles.anchor.{r}", rho(gen) == rho(disp), None, anchor)]


def _const_unit(r, mode, seed):
    p, q = tangles.parse_rational(r)
    w = tangles.tangle_chword(tangles.cf_expand(p, q))
    target = tangles.checkpoint(r)
    anchor = f"constant term of A(y~_{r}) at x0 = x1 = q^(1/2), x = -q^(1/2) equals its closed form"
    if mode == "fast":
        ok = tangles.screen_word(w, target, seed=seed)
        return [Report(f"tangles.const.{r}", ok, None, anchor, note="probabilistic")]
    value = tangles.const_term_word(w)
    return [Report(f"tangles.const.{r}", value == target, value, anchor)]


def _mcg_unit(part, mode, seed):
    fn = {
        "braid": mcg.braid_checks, "commute": mcg.commutation_checks, "inverse": mcg.inverse_checks,
        "display": mcg.composite_display_checks, "sixfold": mcg.sixfold_checks,
        "three_chain": mcg.three_chain_checks, "sigma": mcg.sigma_checks,
        "well_defined": mcg.verify_well_definedness,
    }[part]
    out = fn()
    for rep in out:
        if rep.id in mcg.KNOWN_FAILURES and not rep.passed:
            rep.note = "known failure"
    return out


MCG_PARTS = ("braid", "commute", "inverse", "display", "sixfold", "three_chain", "sigma", "well_defined")


def units(suites):
    """(suite, unit name, callable args) in a fixed order."""
    out = []
    for s in SUITES:
        if s not in suites:
            continue
        if s in ("hecke", "gk", "dual", "images", "curves"):
            out.append((s, s, ("relations", s)))
        elif s == "aw":
            out.append((s, "aw", ("aw",)))
        elif s == "mcg":
            out += [(s, f"mcg.{p}", ("mcg", p)) for p in MCG_PARTS]
        elif s == "tangles":
            out.append((s, "tangles.twist", ("tangle_words",)))
            out += [(s, f"tangles.anchor.{r}", ("anchor", r)) for r in ("5/2", "7/2")]
            out += [(s, f"tangles.const.{r}", ("const", r)) for r in ("5/2", "7/2")]
    return out


def run_unit(unit, mode="exact", seed=0):
    kind, *args = unit
    t = time.perf_counter()
    if kind == "relations":
        reps = _relation_unit(args[0], mode, seed)
    elif kind == "aw":
        reps = _aw_unit(mode, seed)
    elif kind == "mcg":
        reps = _mcg_unit(args[0], mode, seed)
    elif kind == "tangle_words":
        reps = _tangle_words_unit(mode, seed)
    elif kind == "anchor":
        reps = _anchor_unit(args[0], mode, seed)
    elif kind == "const":
        reps = _const_unit(args[0], mode, seed)
    else:
        raise KeyError(kind)
    elapsed = (time.perf_counter() - t) * 1000 / max(len(reps), 1)
    return [record(rep, elapsed) for rep in reps]


def record(rep, time_ms=None):
    return {
        "id": rep.id,
        "anchor": rep.anchor,
        "scope": rep.scope,
        "pass": bool(rep.passed),
        "residual": rep.summary(),
        "note": rep.note,
        "time_ms": time_ms,
    }


def _run_spec(args):
    unit, mode, seed = args
    return run_unit(unit, mode, seed)


def run_checks(suites, mode="exact", seed=0, workers=None):
    """All records of the selected suites, sorted by id."""
    todo = [(unit, mode, seed) for _, _, unit in units(suites)]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(todo) <= 1:
        batches = [_run_spec(a) for a in todo]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            batches = list(ex.map(_run_spec, todo))
    out = [r for b in batches for r in b]
    out.sort(key=lambda r: r["id"])
    return out
