"""Backend selection for the compute kernels.

Two implementations of every hot kernel exist: a numba @njit version and a
pure-numpy version.  The environment variable PENTAPOW_BACKEND picks one:

    PENTAPOW_BACKEND=numba   force the JIT kernels (error if numba is absent)
    PENTAPOW_BACKEND=numpy   force the pure-numpy kernels
    unset                    numba when importable, numpy otherwise

The variable is read on every call so tests can flip it at runtime.
"""

import os

try:
    import numba  # noqa: F401
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

_ENV_VAR = "PENTAPOW_BACKEND"


def active_backend():
    """Return the backend name a kernel call would use right now."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice == "numba":
        if not HAS_NUMBA:
            raise RuntimeError(
                "PENTAPOW_BACKEND=numba but numba is not importable")
        return "numba"
    if choice == "numpy":
        return "numpy"
    if choice:
        raise RuntimeError(
            f"PENTAPOW_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    return "numba" if HAS_NUMBA else "numpy"


def use_numba():
    return active_backend() == "numba"
