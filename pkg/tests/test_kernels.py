import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrtopo import _kernels, _snf_py
from arrtopo.arrangement import vassiliev_skeleton
from arrtopo.complexes import full_simplex, barycentric_subdivision
from arrtopo.homology import boundary_matrix, invariant_factors, reduced_homology

needs_c = pytest.mark.skipif(_kernels._ckernels is None, reason="compiled kernel not built")

matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@needs_c
@settings(max_examples=200, deadline=None)
@given(matrices)
def test_backends_agree(m):
    c = _kernels.smith_pivots(np.array(m, dtype=np.int64), backend="cython")
    p = _kernels.smith_pivots(m, backend="python")
    assert len(c) == len(p)
    assert invariant_factors(c) == invariant_factors(p)


@needs_c
def test_backends_agree_on_boundary_matrices():
    k = barycentric_subdivision(full_simplex(3))
    assert reduced_homology(k, backend="cython") == reduced_homology(k, backend="python")
    for d in range(k.dim + 1):
        b = boundary_matrix(k, d)
        assert _kernels.smith_pivots(b, "cython") == _kernels.smith_pivots(b, "python")


@needs_c
def test_overflow_falls_back_to_exact_path():
    big = 2**62
    m = [[big, 3], [big - 1, big]]
    with pytest.raises(OverflowError):
        _kernels._ckernels.smith_pivots(np.array(m, dtype=np.int64))
    assert invariant_factors(_kernels.smith_pivots(m)) == invariant_factors(_snf_py.smith_pivots(m))
    huge = [[2**70, 1], [1, 0]]
    assert len(_kernels.smith_pivots(huge)) == 2


def test_pure_backend_selected_by_environment():
    env = dict(os.environ, ARRTOPO_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import arrtopo; print(arrtopo.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.smith_pivots([[1]], backend="fortran")


def test_empty_shapes():
    assert _snf_py.smith_pivots([]) == []
    assert _snf_py.smith_pivots([[]]) == []
    assert _kernels.smith_pivots(np.zeros((1, 0), dtype=np.int64)) == []
