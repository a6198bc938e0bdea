"""Kernel backend selection.

Imports the compiled extension when it is built, otherwise the pure-Python
fallback.  Override with QIDENT_BACKEND=python or QIDENT_BACKEND=cython
(the latter raises if the extension is missing).
"""

import os

_requested = os.environ.get("QIDENT_BACKEND", "auto").lower()

if _requested not in ("auto", "cython", "python", "pure"):
    raise RuntimeError(f"unknown QIDENT_BACKEND value: {_requested!r}")

if _requested in ("python", "pure"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        if _requested == "cython":
            raise
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND = kernels.BACKEND
conv_trunc = kernels.conv_trunc
bivar_mul = kernels.bivar_mul
