"""Kernel selection.

The compiled extension is used when it was built and ``MULTITHRESHOLD_PURE``
is not set.  Calls into it that overflow int64 are transparently retried with
the pure-Python kernel, which never overflows.
"""

import os

from . import _kernel_py

OPTIMAL = _kernel_py.OPTIMAL
UNBOUNDED = _kernel_py.UNBOUNDED

_ext = None
if not os.environ.get("MULTITHRESHOLD_PURE"):
    try:
        from . import _kernel_ext as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


if _ext is None:
    pivot = _kernel_py.pivot
    phase0 = _kernel_py.phase0
    simplex = _kernel_py.simplex
else:
    # The extension only writes back on success, so the inputs are intact
    # when it reports overflow with None.

    def pivot(M, basis, d, r, c):
        out = _ext.pivot(M, basis, d, r, c)
        if out is None:
            return _kernel_py.pivot(M, basis, d, r, c)
        return out

    def phase0(M, basis, d, free_cols, row_ok):
        out = _ext.phase0(M, basis, d, free_cols, row_ok)
        if out is None:
            return _kernel_py.phase0(M, basis, d, free_cols, row_ok)
        return out

    def simplex(M, basis, d, obj_row, col_ok, row_ok):
        out = _ext.simplex(M, basis, d, obj_row, col_ok, row_ok)
        if out is None:
            return _kernel_py.simplex(M, basis, d, obj_row, col_ok, row_ok)
        return out
