"""Optional numba acceleration.

Set ``INJCOLOR_DISABLE_NUMBA=1`` to run every kernel as plain Python/numpy.
The flag is read once, at import time.
"""

from __future__ import annotations

import os

DISABLED = os.environ.get("INJCOLOR_DISABLE_NUMBA", "").strip() not in ("", "0")

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

HAVE_NUMBA = numba is not None and not DISABLED


def njit(fn):
    """``numba.njit`` when enabled, identity otherwise.

    The undecorated function stays reachable as ``fn.py_func`` in both modes,
    which the benchmark uses to time the two paths side by side.
    """
    if HAVE_NUMBA:
        return numba.njit(cache=True)(fn)
    fn.py_func = fn
    return fn
