"""Backend switch for the enumeration kernels.

``FORCIBLY_BACKEND=python`` (or ``FORCIBLY_DISABLE_NUMBA=1``) runs the
kernels as plain Python over numpy arrays; otherwise they are compiled
with ``numba.njit`` when numba is importable.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _wanted() -> str:
    if os.environ.get("FORCIBLY_DISABLE_NUMBA", "").lower() in ("1", "true", "yes"):
        return "python"
    return os.environ.get("FORCIBLY_BACKEND", "numba").lower()


BACKEND = "numba" if (_wanted() == "numba" and numba is not None) else "python"


def jit(fn):
    if BACKEND == "numba":
        return numba.njit(cache=True)(fn)
    return fn
