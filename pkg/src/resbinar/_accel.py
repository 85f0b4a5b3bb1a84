"""Backend selection for the hot kernels.

Kernels are written twice: a numba ``@njit`` version and a vectorised numpy
version.  The numba path is used when numba imports cleanly and the
environment variable ``RESBINAR_DISABLE_NUMBA`` is unset (or ``0``).
"""

from __future__ import annotations

import os

_flag = os.environ.get("RESBINAR_DISABLE_NUMBA", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("disabled by RESBINAR_DISABLE_NUMBA")
    import numba

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - depends on environment
    numba = None
    NUMBA_AVAILABLE = False


def njit(func):
    """``numba.njit(cache=True, nogil=True)`` or the identity."""
    if numba is None:
        return func
    return numba.njit(cache=True, nogil=True)(func)


def backend() -> str:
    return "numba" if NUMBA_AVAILABLE else "numpy"


def thread_count() -> int:
    """Worker cap from ``RESBINAR_THREADS`` (default 1)."""
    raw = os.environ.get("RESBINAR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
