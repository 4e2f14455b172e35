"""Backend selection for the numeric kernels.

Every hot kernel exists twice: a loop version compiled with numba ``@njit``
and a vectorized pure-numpy version.  ``KINEMETRY_BACKEND`` picks one of
``numba`` (default) or ``numpy``; it is read on every dispatch so tests can
switch it with ``monkeypatch.setenv``.  When numba cannot be imported the
numpy path is used regardless of the flag.
"""

import os

BACKEND_ENV = "KINEMETRY_BACKEND"
BACKENDS = ("numba", "numpy")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False


def backend():
    name = os.environ.get(BACKEND_ENV, "numba").strip().lower() or "numba"
    if name not in BACKENDS:
        raise ValueError(f"{BACKEND_ENV} must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        return "numpy"
    return name


def njit(func):
    """``numba.njit`` with caching and the GIL released; identity without numba."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)
