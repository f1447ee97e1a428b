"""Backend selection for the candidate scan.

The compiled ``_scan_c`` extension is used when it was built and the
instance fits in machine integers; otherwise the pure-Python scan runs.
Set ``BNSECANT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _scan_py

try:
    if os.environ.get("BNSECANT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend forced")
    from . import _scan_c
except ImportError:
    _scan_c = None

BACKEND = "cython" if _scan_c is not None else "python"

_INT_LIMIT = 1 << 28
_LL_LIMIT = 1 << 62


def _clamp(b):
    if b is None:
        return None
    return max(-_LL_LIMIT, min(_LL_LIMIT, b))


def fits_compiled(d1, e, r1, f):
    return 0 <= r1 and 0 <= f and d1 + e < _INT_LIMIT and r1 + f < _INT_LIMIT


def scan(d1, e, r1, f, zero, sub, use_e, y1, y2, z1, z2, zsub, witness_cap,
         backend=None):
    """Dispatch to the selected backend; see ``_scan_py.scan`` for the contract."""
    backend = backend or BACKEND
    if backend == "cython":
        if _scan_c is None:
            raise RuntimeError("compiled scan kernel is not available")
        if fits_compiled(d1, e, r1, f):
            return _scan_c.scan(
                d1, e, r1, f, zero, sub, use_e,
                _clamp(y1), _clamp(y2), _clamp(z1), _clamp(z2), zsub, witness_cap,
            )
    return _scan_py.scan(d1, e, r1, f, zero, sub, use_e, y1, y2, z1, z2, zsub,
                         witness_cap)
