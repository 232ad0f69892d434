"""Backend selection for the elimination kernel.

The compiled kernel is used when it imports and ``ARRTOPO_PURE`` is unset.
It works in int64 and raises OverflowError rather than wrapping, in which
case the call is repeated with the exact pure-Python kernel.
"""

import os

import numpy as np

from . import _snf_py

try:
    if os.environ.get("ARRTOPO_PURE"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _as_int64(matrix):
    if isinstance(matrix, np.ndarray) and matrix.dtype == np.int64:
        return matrix
    try:
        return np.array(matrix, dtype=np.int64, ndmin=2)
    except OverflowError:
        return None


def _as_lists(matrix):
    if isinstance(matrix, np.ndarray):
        return matrix.tolist()
    return matrix


def smith_pivots(matrix, backend: str | None = None) -> list[int]:
    """Absolute diagonal entries after diagonalizing ``matrix``.

    ``matrix`` is a 2-d int64 array or a list of rows of Python ints.
    """
    backend = backend or BACKEND
    if backend == "python":
        return _snf_py.smith_pivots(_as_lists(matrix))
    if backend != "cython":
        raise ValueError(f"unknown backend {backend!r}")
    if _ckernels is None:
        raise RuntimeError("compiled kernel is not built")
    arr = _as_int64(matrix)
    if arr is not None:
        try:
            return _ckernels.smith_pivots(arr)
        except OverflowError:
            pass
    return _snf_py.smith_pivots(_as_lists(matrix))
