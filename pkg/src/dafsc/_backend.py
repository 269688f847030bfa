"""Kernel backend selection.

The numeric hot paths (sum-of-sinusoids fading synthesis, the per-symbol
relay/combining chain, and the scalar special functions) exist in two
implementations: numba ``@njit`` kernels and pure-numpy fallbacks.  The
active one is chosen once at import time from the ``DAFSC_BACKEND``
environment variable:

* ``auto`` (default) - numba if importable, else numpy
* ``numba``          - require numba, fail loudly if missing
* ``numpy``          - force the pure-numpy path even if numba is present

Both paths are always importable when numba is installed, so tests can
compare them directly regardless of the active choice.
"""

import os

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only on bare installs
    numba = None
    HAS_NUMBA = False

_requested = os.environ.get("DAFSC_BACKEND", "auto").strip().lower()

if _requested not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"DAFSC_BACKEND={_requested!r} not understood; use auto, numba or numpy"
    )
if _requested == "numba" and not HAS_NUMBA:
    raise RuntimeError("DAFSC_BACKEND=numba but numba is not installed")

BACKEND = "numpy" if _requested == "numpy" or not HAS_NUMBA else "numba"


def using_numba() -> bool:
    """True when the numba kernels are the active dispatch target."""
    return BACKEND == "numba"


def jit_scalar(func):
    """Compile a scalar math function when the numba backend is active.

    Under the numpy backend the plain Python function is returned, so the
    identical source runs (slowly) as the fallback path.
    """
    if BACKEND == "numba":
        return numba.njit(cache=True, nogil=True)(func)
    return func


def compile_kernel(func):
    """Compile an array kernel with numba whenever numba is installed.

    Unlike :func:`jit_scalar` this ignores the backend choice: the
    compiled variant stays importable so the two implementations can be
    compared side by side.  Dispatch between them is the caller's job.
    """
    if HAS_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func
