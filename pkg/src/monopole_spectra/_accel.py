"""Switch between numba-compiled kernels and the plain numpy/Python path.

Set ``MONOPOLE_SPECTRA_JIT=0`` before import to force the fallback path.
If numba is not importable the fallback is used silently.
"""
import os

_FLAG = os.environ.get("MONOPOLE_SPECTRA_JIT", "1").strip().lower()
_WANT_JIT = _FLAG not in ("0", "false", "no", "off")

try:
    if not _WANT_JIT:
        raise ImportError
    from numba import njit as _njit

    JIT_ENABLED = True
except ImportError:  # pragma: no cover - depends on environment
    _njit = None
    JIT_ENABLED = False


def kernel(fn):
    """Compile ``fn`` with ``numba.njit`` when enabled, else return it unchanged."""
    if JIT_ENABLED:
        return _njit(cache=True, fastmath=False)(fn)
    return fn


def backend_name() -> str:
    return "numba" if JIT_ENABLED else "numpy"
