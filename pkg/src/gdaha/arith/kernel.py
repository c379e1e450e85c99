"""Select the polynomial kernel at import time.

FLINT (via python-flint) is used when importable; otherwise the pure-Python
kernel. Set ``GDAHA_KERNEL=python`` to force the fallback.
"""

import logging
import os

log = logging.getLogger(__name__)


def _select():
    want = os.environ.get("GDAHA_KERNEL", "").strip().lower()
    if want not in ("", "flint", "python"):
        raise ImportError(f"unknown GDAHA_KERNEL={want!r} (expected 'flint' or 'python')")
    if want != "python":
        try:
            from . import _kernel_flint as k
            return k
        except ImportError:
            if want == "flint":
                raise
            log.warning("python-flint not available; using the pure-Python kernel")
    from . import _kernel_py as k
    return k


K = _select()
NAME = K.NAME
