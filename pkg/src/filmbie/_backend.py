"""Backend selection for the hot kernels.

The O(n^2) matrix assembly and the layer-potential sums used for field
evaluation exist twice: as explicit loops compiled with numba, and as
vectorized numpy expressions.  Both give the same numbers to rounding.

Set ``FILMBIE_DISABLE_NUMBA=1`` in the environment to force the numpy
path (useful when numba is missing or when debugging).
"""

import os

_FLAG = "FILMBIE_DISABLE_NUMBA"

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_disabled = os.environ.get(_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}
_backend = "numba" if (HAVE_NUMBA and not _disabled) else "numpy"


def get_backend():
    return _backend


def set_backend(name):
    """Switch the active backend at runtime ("numba" or "numpy")."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


def kernels(name=None):
    """Return the kernel module for ``name`` (default: active backend)."""
    name = name or _backend
    if name == "numba":
        from . import _numba_kernels as mod
    else:
        from . import _numpy_kernels as mod
    return mod
