"""Optional numba acceleration.

Kernels are written in the numba-compatible subset of Python and run on
numpy arrays.  When numba is importable and ``GENUSLAB_NO_NUMBA`` is unset
(or ``0``), they are compiled with ``numba.njit``; otherwise the very same
functions run in the interpreter.
"""
from __future__ import annotations

import os

DISABLE_ENV = "GENUSLAB_NO_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USING_NUMBA = numba is not None and os.environ.get(DISABLE_ENV, "").strip() in ("", "0")


def jit(fn):
    if USING_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn
