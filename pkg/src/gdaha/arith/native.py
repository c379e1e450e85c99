"""Select the compiled loops (``_native``) or their pure-Python twins.

``GDAHA_NATIVE=0`` forces the Python versions.
"""

import os

if os.environ.get("GDAHA_NATIVE", "1").strip() == "0":
    from . import _native_py as N
else:
    try:
        from . import _native as N
    except ImportError:
        from . import _native_py as N

NAME = N.NAME
remap = N.remap
eval_terms = N.eval_terms
