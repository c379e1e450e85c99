"""Compiled loops against their pure-Python twins, and the FLINT polynomial
kernel against the pure-Python one.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--slow]

Kernels are chosen at import time, so every configuration runs in its own
interpreter, and each workload is timed cold in a fresh process. --slow adds
the larger workloads to the pure-Python kernel, where they take minutes.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time

CONFIGS = {
    "flint+cython": {"GDAHA_KERNEL": "flint", "GDAHA_NATIVE": "1"},
    "flint+python": {"GDAHA_KERNEL": "flint", "GDAHA_NATIVE": "0"},
    "python+python": {"GDAHA_KERNEL": "python", "GDAHA_NATIVE": "0"},
}


def _workloads():
    from gdaha import tangles
    from gdaha.askey_wilson import aw_poly
    from gdaha.words import parse_word

    w52 = tangles.tangle_chword(tangles.cf_expand(5, 2))
    return {
        "aw_poly(1, star)": lambda: aw_poly(1, "star"),
        "aw_poly(3, star)": lambda: aw_poly(3, "star"),
        "const(T1 T0)": lambda: tangles.const_term_word(parse_word("T1 T0")),
        "screen(5/2)": lambda: tangles.screen_word(w52, tangles.checkpoint("5/2")),
        "rho_collapsed(5/2)": lambda: tangles._collapsed_rho(w52),
    }


def child(names):
    """Cold timings: results are cached, so each workload runs once per process."""
    from gdaha.arith import kernel, native

    work = _workloads()
    out = {"kernel": kernel.NAME, "native": native.NAME}
    for name in names:
        t = time.perf_counter()
        work[name]()
        out[name] = time.perf_counter() - t
    print(json.dumps(out))


def loops(repeat):
    """remap and eval_terms on synthetic input, both implementations in-process."""
    from gdaha.arith import _native_py

    try:
        from gdaha.arith import _native
    except ImportError:
        return None
    rng = random.Random(0)
    parts = [{tuple(rng.randrange(0, 9) for _ in range(8)): rng.randrange(1, 99) for _ in range(400)}
             for _ in range(2)]
    prime = (1 << 61) - 1
    terms = {tuple(rng.randrange(-6, 9) for _ in range(8)): (rng.randrange(1, prime), rng.randrange(1, prime))
             for _ in range(2000)}
    point = [rng.randrange(2, prime) for _ in range(8)]
    rows = {}
    for label, fn in (("remap", lambda m: m.remap(parts, 0, 1, 2, 3, 2, 1, -1, True)),
                      ("eval_terms", lambda m: m.eval_terms(terms, point, prime))):
        times = {}
        for mod in (_native, _native_py):
            best = float("inf")
            for _ in range(repeat):
                t = time.perf_counter()
                for _ in range(20):
                    fn(mod)
                best = min(best, time.perf_counter() - t)
            times[mod.NAME] = best
        rows[label] = times
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--slow", action="store_true")
    ap.add_argument("--child", nargs="+", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        return child(args.child)

    rows = loops(args.repeat)
    if rows is None:
        print("compiled loops not built; skipping the loop comparison")
    else:
        print(f"{'loop (x20)':<22}{'cython':>12}{'python':>12}{'speedup':>10}")
        for name, t in rows.items():
            print(f"{name:<22}{t['cython']:>11.4f}s{t['python']:>11.4f}s{t['python'] / t['cython']:>9.1f}x")
    print()

    names = ["aw_poly(1, star)", "aw_poly(3, star)", "const(T1 T0)", "screen(5/2)", "rho_collapsed(5/2)"]
    slow = {"aw_poly(3, star)", "rho_collapsed(5/2)"}
    results = {}
    for cfg, env in CONFIGS.items():
        todo = [n for n in names if cfg != "python+python" or args.slow or n not in slow]
        results[cfg] = {}
        for name in todo:
            for _ in range(args.repeat):
                r = subprocess.run([sys.executable, __file__, "--child", name],
                                   env=dict(os.environ, **env), capture_output=True, text=True, check=True)
                row = json.loads(r.stdout)
                best = min(results[cfg].get(name, float("inf")), row.pop(name))
                results[cfg].update(row, **{name: best})
    print(f"{'workload':<22}" + "".join(f"{c:>16}" for c in CONFIGS))
    for name in names:
        cells = []
        for cfg in CONFIGS:
            v = results[cfg].get(name)
            cells.append(f"{v:>15.4f}s" if v is not None else f"{'skipped':>16}")
        print(f"{name:<22}" + "".join(cells))
    actual = {c: f"{r['kernel']}/{r['native']}" for c, r in results.items()}
    print("\nloaded:", ", ".join(f"{c} -> {a}" for c, a in actual.items()))


if __name__ == "__main__":
    main()
