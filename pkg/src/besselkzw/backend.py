"""Selects the kernel backend at import time.

The compiled extension is preferred when present; set the environment
variable BESSELKZW_PURE_PYTHON=1 to force the pure-Python kernels.
"""

import os

if os.environ.get("BESSELKZW_PURE_PYTHON", "") == "1":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels


def backend_name() -> str:
    """'cython' when the compiled core is active, else 'python'."""
    return kernels.BACKEND_NAME
