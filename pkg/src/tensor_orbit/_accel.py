"""Backend selection for the integer kernels.

Set ``TENSOR_ORBIT_NO_NUMBA=1`` to force the pure-numpy code paths even when
numba is importable. The flag is read once, at import time.
"""
import os

_DISABLED = os.environ.get("TENSOR_ORBIT_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError("numba disabled by TENSOR_ORBIT_NO_NUMBA")
    import numba as _numba

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the system TBB is often too old and numba warns on first use
        _numba.config.THREADING_LAYER = "workqueue"
except ImportError:
    _numba = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise the identity decorator."""
    if HAVE_NUMBA:
        kwargs.setdefault("cache", True)
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


if HAVE_NUMBA:
    prange = _numba.prange
else:
    prange = range


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def set_threads(k: int) -> int:
    """Cap kernel parallelism; returns the effective thread count."""
    if not HAVE_NUMBA:
        return 1
    k = max(1, min(int(k), _numba.config.NUMBA_NUM_THREADS))
    _numba.set_num_threads(k)
    return k
