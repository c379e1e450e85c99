"""Command-line front end.

    gdaha verify [--suite hecke ...] [--mode exact|fast] [--output text|json]
    gdaha aw-poly M [--params generic|star]
    gdaha curve k2,1^3 [--apply]
    gdaha tangle 5/2 [--poly]
    gdaha eval EXPR [--subs x=u^2 ...] [--word]

Exit status: 0 when every selected check passes, 1 when one fails, 2 on bad
arguments.
"""

import argparse
import json
import re
import sys
import time

from . import __version__

SUITE_CHOICES = ("hecke", "gk", "dual", "images", "curves", "aw", "mcg", "tangles", "all")


class UsageError(Exception):
    pass


def _parser():
    p = argparse.ArgumentParser(prog="gdaha", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--mode", choices=("exact", "fast"), default="exact")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--output", choices=("text", "json"), default="text")
        sp.add_argument("--degree", type=_nonneg, default=6)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", action="append", choices=SUITE_CHOICES,
                   help="repeatable; default all")
    v.add_argument("--list", action="store_true", help="print the relation manifest and exit")
    v.add_argument("--workers", type=_positive, help="overrides GDAHA_WORKERS")
    v.add_argument("--timings", action="store_true", help="report wall times (not reproducible)")
    v.add_argument("--diagnostics", action="store_true",
                   help="also apply the spherical images to e(x^k), k <= --degree")
    common(v)

    a = sub.add_parser("aw-poly", help="Askey-Wilson polynomial P_m")
    a.add_argument("m", type=_nonneg)
    a.add_argument("--params", choices=("generic", "star"), default="generic")
    common(a)

    c = sub.add_parser("curve", help="operator image of a curve: k1..k6, k12..k321, or k2,1^n")
    c.add_argument("curve")
    c.add_argument("--apply", action="store_true", help="print the image applied to 1 instead")
    common(c)

    t = sub.add_parser("tangle", help="tangle word and constant term for p/q")
    t.add_argument("rational")
    t.add_argument("--twist", help="explicit twist word such as 'Dy^1 Dx^-1' instead of p/q")
    t.add_argument("--poly", action="store_true", help="also emit the full DAHA polynomial")
    t.add_argument("--convention", default=None, help="constant-term convention")
    common(t)

    e = sub.add_parser("eval", help="normalize a rational function, or a word's constant term")
    e.add_argument("expr")
    e.add_argument("--subs", action="append", default=[], metavar="NAME=EXPR")
    e.add_argument("--word", action="store_true", help="EXPR is a word; print its constant term")
    common(e)
    return p


def _nonneg(s):
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _config(args, **extra):
    cfg = {"command": args.command, "mode": args.mode, "seed": args.seed,
           "output": args.output, "degree": args.degree}
    cfg.update(extra)
    return cfg


def _emit_json(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


# --- verify -------------------------------------------------------------------------


def _diagnostic_records(degree, timings):
    from .arith import x
    from .askey_wilson import is_symmetric
    from .checks import record
    from .generators import idempotent
    from .relations import Report, spherical_words
    from .words import ch_word

    e = idempotent()
    out = []
    for k, w in spherical_words().items():
        op = ch_word(w)
        for d in range(degree + 1):
            t = time.perf_counter()
            f = op.apply(e.apply(x ** d))
            rep = Report(f"diag.spherical.{k}.deg{d}", is_symmetric(f), None,
                         f"A({k}) maps e(x^{d}) to a symmetric function")
            out.append(record(rep, (time.perf_counter() - t) * 1000))
    return out


def cmd_verify(args, out):
    from . import checks, relations

    if args.list:
        rows = relations.manifest()
        if args.output == "json":
            _emit_json({"version": __version__, "relations": rows}, out)
        else:
            for r in rows:
                out.write(f"{r['id']}\t{r['scope']}\t{r['anchor']}\n")
        return 0
    chosen = args.suite or ["all"]
    suites = set(checks.SUITES) if "all" in chosen else set(chosen)
    recs = checks.run_checks(suites, args.mode, args.seed, args.workers)
    if args.diagnostics:
        recs = sorted(recs + _diagnostic_records(args.degree, args.timings), key=lambda r: r["id"])
    if not args.timings:
        for r in recs:
            r["time_ms"] = None
    failed = [r["id"] for r in recs if not r["pass"]]
    summary = {"total": len(recs), "passed": len(recs) - len(failed), "failed": len(failed),
               "failures": failed}
    if args.output == "json":
        _emit_json({"version": __version__,
                    "config": _config(args, suites=sorted(suites), diagnostics=args.diagnostics),
                    "checks": recs, "summary": summary}, out)
    else:
        for r in recs:
            line = f"{'PASS' if r['pass'] else 'FAIL'}  {r['id']}  [{r['scope']}]  {r['anchor']}"
            if r["note"]:
                line += f"  ({r['note']})"
            if r["time_ms"] is not None:
                line += f"  {r['time_ms']:.1f} ms"
            out.write(line + "\n")
        out.write(f"{summary['passed']}/{summary['total']} passed\n")
    return 1 if failed else 0


# --- single computations ------------------------------------------------------------


def cmd_aw_poly(args, out):
    from .askey_wilson import aw_poly

    value = str(aw_poly(args.m, args.params))
    if args.output == "json":
        _emit_json({"version": __version__, "config": _config(args, m=args.m, params=args.params),
                    "value": value}, out)
    else:
        out.write(value + "\n")
    return 0


def resolve_curve(name):
    """Operator for a curve id: k1..k6, a table id such as k543, or k2,1^n."""
    from .generators import CURVES, build_skein_image, curve_k2_power
    from .relations import CURVE_IDS, curve_explicit

    name = name.replace(" ", "")
    m = re.fullmatch(r"k2,1(?:\^(-?\d+))?", name)
    if m:
        return curve_k2_power(int(m.group(1) or 1))
    if name in CURVES:
        return build_skein_image(name)
    if name in CURVE_IDS:
        return curve_explicit(name)
    raise UsageError(f"unknown curve {name!r}")


def cmd_curve(args, out):
    op = resolve_curve(args.curve)
    value = str(op.apply(1) if args.apply else op)
    if args.output == "json":
        _emit_json({"version": __version__, "config": _config(args, curve=args.curve, apply=args.apply),
                    "value": value}, out)
    else:
        out.write(value + "\n")
    return 0


def cmd_tangle(args, out):
    from . import tangles

    conv = args.convention or tangles.FROZEN_CONVENTION
    if conv not in tangles.CONVENTIONS:
        raise UsageError(f"unknown convention {conv!r}; choose from {', '.join(tangles.CONVENTIONS)}")
    result = {"rational": args.rational}
    if args.twist is not None:
        tw = tangles.parse_twistword(args.twist)
        result["entries"] = None
    else:
        p, q = tangles.parse_rational(args.rational)
        cf = tangles.cf_expand(p, q)
        tw = tangles.tangle_twistword(cf)
        result["entries"] = list(cf.entries)
    w = tangles.twist_chword(tw)
    result["twist_word"] = str(tw)
    result["ch_word"] = str(w)
    result["convention"] = conv
    status = 0
    checkpoint = None
    try:
        checkpoint = tangles.checkpoint(args.rational.replace(" ", ""))
    except KeyError:
        pass
    if args.mode == "fast":
        result["const_term"] = None
        if checkpoint is not None:
            ok = tangles.screen_word(w, checkpoint, seed=args.seed)
            result["checkpoint"] = {"value": str(checkpoint), "pass": ok, "note": "probabilistic"}
            status = 0 if ok else 1
    else:
        value = tangles.const_term_word(w, conv)
        result["const_term"] = str(value)
        if checkpoint is not None:
            ok = value == checkpoint
            result["checkpoint"] = {"value": str(checkpoint), "pass": ok}
            status = 0 if ok else 1
    if args.poly:
        result["daha_poly"] = str(tangles.daha_poly_word(w))
    if args.output == "json":
        _emit_json({"version": __version__, "config": _config(args, rational=args.rational,
                                                               twist=args.twist, poly=args.poly),
                    **result}, out)
    else:
        for k, v in result.items():
            if isinstance(v, dict):
                v = f"{v['value']}  {'PASS' if v['pass'] else 'FAIL'}" + (f" ({v['note']})" if "note" in v else "")
            out.write(f"{k}: {v}\n")
    return status


def cmd_eval(args, out):
    from .arith import parse

    bindings = {}
    for item in args.subs:
        name, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--subs expects NAME=EXPR, got {item!r}")
        bindings[name.strip()] = parse(val)
    if args.word:
        from .tangles import const_term_word
        from .words import parse_word

        value = const_term_word(parse_word(args.expr))
    else:
        value = parse(args.expr)
    if bindings:
        value = value.subs(bindings)
    if args.output == "json":
        _emit_json({"version": __version__, "config": _config(args, expr=args.expr, subs=args.subs),
                    "value": str(value)}, out)
    else:
        out.write(f"{value}\n")
    return 0


COMMANDS = {"verify": cmd_verify, "aw-poly": cmd_aw_poly, "curve": cmd_curve,
            "tangle": cmd_tangle, "eval": cmd_eval}


def run(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else 2
    from .tangles import NoEvenExpansion

    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, NoEvenExpansion, ValueError) as ex:
        sys.stderr.write(f"gdaha: error: {ex}\n")
        return 2


def main(argv=None):
    try:
        code = run(argv)
        sys.stdout.flush()
    except BrokenPipeError:
        code = 1
        sys.stdout = None
    sys.exit(code)


if __name__ == "__main__":
    main()
