"""Backend selection for the hot kernels.

The compiled extension is used when it imported cleanly; set
``APOLAR_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
ff_gauss_jordan = _kernels_py.ff_gauss_jordan
aberth = _kernels_py.aberth

if os.environ.get("APOLAR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None
    if _ckernels is not None:
        BACKEND = "cython"
        ff_gauss_jordan = _ckernels.ff_gauss_jordan
        aberth = _ckernels.aberth

__all__ = ["BACKEND", "ff_gauss_jordan", "aberth"]
