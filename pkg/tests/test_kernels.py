import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from gdaha.arith import _native_py, kernel, native
from gdaha.arith.probe import PRIME

try:
    from gdaha.arith import _native
except ImportError:
    _native = None

needs_native = pytest.mark.skipif(_native is None, reason="compiled extension not built")

exps = st.tuples(*[st.integers(-3, 4)] * 8)
coeffs = st.tuples(st.integers(-10 ** 20, 10 ** 20), st.integers(1, 10 ** 6))


@needs_native
@given(st.dictionaries(exps, coeffs, max_size=6), st.lists(st.integers(2, PRIME - 2), min_size=8, max_size=8))
def test_eval_terms_twins(terms, point):
    assert _native.eval_terms(terms, point, PRIME) == _native_py.eval_terms(terms, point, PRIME)


@needs_native
@given(st.lists(st.dictionaries(st.tuples(*[st.integers(0, 5)] * 8), st.integers(1, 9), max_size=4), min_size=3,
                max_size=3),
       st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.booleans())
def test_remap_twins(parts, ux, u0, u1, flip):
    args = (parts, 7, 6, 5, 4, ux, u0, u1, flip)
    assert _native.remap(*args) == _native_py.remap(*args)


def test_selected():
    assert kernel.NAME in ("flint", "python")
    assert native.NAME in ("cython", "python")


PROBE = r"""
import json
from gdaha.arith import kernel, native, x
from gdaha.askey_wilson import aw_poly
from gdaha.generators import idempotent
from gdaha.relations import verify_relation
from gdaha.tangles import const_term_word
from gdaha.words import rho, word
print(json.dumps({
    "kernel": kernel.NAME, "native": native.NAME,
    "aw": str(aw_poly(1, "star").value),
    "ct": str(const_term_word(word("T1", "T0"))),
    "op": str(rho(word("U0", "T0")) * idempotent()),
    "rel": verify_relation("hecke.star.prod_TTTT").passed,
    "probe": (x ** 2 - 1).eval_mod([3] * 8, 1000003, 2),
}))
"""

# the pure-Python gcd is slow, so only small computations are compared


def _run(env):
    out = subprocess.run([sys.executable, "-c", PROBE], env={**os.environ, **env}, capture_output=True,
                         text=True, check=True, timeout=600)
    return json.loads(out.stdout)


def test_python_kernel_agrees():
    fast = _run({})
    slow = _run({"GDAHA_KERNEL": "python", "GDAHA_NATIVE": "0"})
    assert slow["kernel"] == "python" and slow["native"] == "python"
    for key in ("aw", "ct", "op", "rel", "probe"):
        assert fast[key] == slow[key]


def test_bad_kernel_name():
    r = subprocess.run([sys.executable, "-c", "import gdaha.arith"], env={**os.environ, "GDAHA_KERNEL": "gpu"},
                       capture_output=True, text=True)
    assert r.returncode != 0 and "GDAHA_KERNEL" in r.stderr
