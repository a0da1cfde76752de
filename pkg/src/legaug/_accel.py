"""Numba toggle.

Kernels are written once as plain Python over numpy arrays.  When numba is
importable and ``LEGAUG_DISABLE_JIT`` is unset (or ``0``), they are compiled
with ``@njit``; otherwise the same source runs interpreted.
"""
from __future__ import annotations

import os

_flag = os.environ.get("LEGAUG_DISABLE_JIT", "0").strip().lower()
JIT_REQUESTED = _flag in ("", "0", "false", "no")

try:
    from numba import njit as _njit
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _njit = None
    NUMBA_AVAILABLE = False

USE_JIT = JIT_REQUESTED and NUMBA_AVAILABLE


def jit_pair(func):
    """Return ``(compiled, interpreted)`` versions of ``func``.

    ``compiled`` is the interpreted function itself when numba is missing.
    """
    if NUMBA_AVAILABLE:
        return _njit(cache=True)(func), func
    return func, func


def backend_name() -> str:
    return "numba" if USE_JIT else "python"
