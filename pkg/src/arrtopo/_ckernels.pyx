# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 elimination kernel.  Raises OverflowError instead of wrapping."""

import numpy as np

cdef extern from *:
    """
    static inline int _mulsub_ovf(long long a, long long q, long long b, long long *out) {
        long long t;
        if (__builtin_mul_overflow(q, b, &t)) return 1;
        if (__builtin_sub_overflow(a, t, out)) return 1;
        return 0;
    }
    """
    int _mulsub_ovf(long long a, long long q, long long b, long long *out) nogil


cdef inline long long _floordiv(long long a, long long b) nogil:
    cdef long long q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long _floormod(long long a, long long b) nogil:
    cdef long long r = a % b
    if r != 0 and ((r < 0) != (b < 0)):
        r += b
    return r


cdef inline long long _abs(long long a) nogil:
    return -a if a < 0 else a


def smith_pivots(matrix):
    """Same contract as ``_snf_py.smith_pivots``; entries must fit in int64."""
    cdef long long[:, ::1] a = np.array(matrix, dtype=np.int64, ndmin=2, copy=True)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1] if m else 0
    if m == 0 or n == 0:
        return []
    cdef char[::1] active = np.ones(m, dtype=np.int8)
    cdef Py_ssize_t c, i, j, r
    cdef long long p, q, best, v, tmp
    cdef bint cleared, swapped
    cdef list pivots = []
    for c in range(n):
        while True:
            r = -1
            best = 0
            for i in range(m):
                if active[i]:
                    v = a[i, c]
                    if v != 0 and (r < 0 or _abs(v) < best):
                        r = i
                        best = _abs(v)
                        if best == 1:
                            break
            if r < 0:
                break
            p = a[r, c]
            if p == -9223372036854775807 - 1:
                raise OverflowError("pivot magnitude exceeds int64")
            cleared = True
            for i in range(m):
                if active[i] and i != r and a[i, c] != 0:
                    if a[i, c] == -9223372036854775807 - 1:
                        raise OverflowError("entry magnitude exceeds int64")
                    q = _floordiv(a[i, c], p)
                    for j in range(c, n):
                        if a[r, j] != 0:
                            if _mulsub_ovf(a[i, j], q, a[r, j], &tmp):
                                raise OverflowError("int64 overflow in row operation")
                            a[i, j] = tmp
                    if a[i, c] != 0:
                        cleared = False
            if not cleared:
                continue
            swapped = False
            for j in range(c + 1, n):
                if a[r, j] != 0:
                    a[r, j] = _floormod(a[r, j], p)
                    if a[r, j] != 0:
                        for i in range(m):
                            if active[i]:
                                tmp = a[i, c]
                                a[i, c] = a[i, j]
                                a[i, j] = tmp
                        swapped = True
                        break
            if swapped:
                continue
            pivots.append(_abs(p))
            active[r] = 0
            break
    return pivots
