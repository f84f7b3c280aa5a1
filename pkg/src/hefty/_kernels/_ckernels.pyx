# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backend: thin wrappers around the C kernels in hk.c."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int8_t, int32_t, int64_t, uint64_t

from hefty._kernels._common import DegenerateInput, KernelOverflow, comb

cnp.import_array()

cdef extern from "hk.h":
    int HK_OK, HK_OVERFLOW, HK_FLAT, HK_SPHERE, HK_QUERY_ON_PLANE, HK_CAPACITY, HK_BAD_ARGS
    int hk_heft_table(int64_t *coords, int64_t *weights, int n, int d,
                      int first_lo, int first_hi,
                      int32_t *hefts, uint64_t *masks, int64_t capacity,
                      int64_t *written, int32_t *witness) nogil
    int hk_depths(int64_t *coords, int n, int d,
                  int64_t *queries, int nq,
                  int32_t *out, int32_t *witness) nogil
    int hk_locate(int64_t *coords, int n, int d,
                  int32_t *simplices, int m,
                  int64_t *query, int8_t *out) nogil

NAME = "cython"
MAX_POINTS = 64


cdef _as_i64(rows, int d):
    # raises OverflowError for values beyond int64; the dispatcher falls back
    arr = np.array(rows, dtype=np.int64).reshape(-1, d)
    return np.ascontiguousarray(arr)


cdef _raise(int status, witness):
    if status == HK_OVERFLOW:
        raise KernelOverflow()
    if status == HK_FLAT:
        raise DegenerateInput("flat", tuple(int(i) for i in witness if i >= 0))
    if status == HK_SPHERE:
        raise DegenerateInput("sphere", tuple(int(i) for i in witness))
    if status == HK_QUERY_ON_PLANE:
        raise DegenerateInput("query", (int(witness[0]),))
    raise RuntimeError(f"kernel failed with status {status}")


def heft_table(coords, weights=None, first_lo=0, first_hi=None):
    """Hefts and enclosed-index bitmasks of every (d+1)-subset, lexicographic order."""
    cdef int n = len(coords)
    cdef int d = len(coords[0])
    if n > MAX_POINTS:
        raise KernelOverflow()
    if first_hi is None:
        first_hi = n
    cdef int64_t[:, ::1] c = _as_i64(coords, d)
    cdef int64_t[::1] w
    cdef int64_t *wptr = NULL
    if weights is not None:
        w = np.ascontiguousarray(np.array(weights, dtype=np.int64))
        wptr = &w[0]
    cdef int64_t capacity = max(comb(n, d + 1), 1)
    hefts = np.zeros(capacity, dtype=np.int32)
    masks = np.zeros(capacity, dtype=np.uint64)
    witness = np.full(d + 2, -1, dtype=np.int32)
    cdef int32_t[::1] hv = hefts
    cdef uint64_t[::1] mv = masks
    cdef int32_t[::1] wv = witness
    cdef int64_t written = 0
    cdef int lo = first_lo, hi = first_hi, status
    with nogil:
        status = hk_heft_table(&c[0, 0], wptr, n, d, lo, hi,
                               &hv[0], &mv[0], capacity, &written, &wv[0])
    if status != HK_OK:
        _raise(status, witness)
    return hefts[:written].tolist(), masks[:written].tolist()


def depths(coords, queries):
    """Halfspace (Tukey) depth of each query with respect to the integer point set."""
    cdef int n = len(coords)
    cdef int d = len(queries[0])
    cdef int nq = len(queries)
    cdef int64_t[:, ::1] c = _as_i64(coords, d) if n else np.zeros((1, d), dtype=np.int64)
    cdef int64_t[:, ::1] q = _as_i64(queries, d)
    out = np.zeros(nq, dtype=np.int32)
    witness = np.full(1, -1, dtype=np.int32)
    cdef int32_t[::1] ov = out
    cdef int32_t[::1] wv = witness
    cdef int status
    with nogil:
        status = hk_depths(&c[0, 0], n, d, &q[0, 0], nq, &ov[0], &wv[0])
    if status != HK_OK:
        _raise(status, witness)
    return out.tolist()


def locate(coords, simplices, query):
    """+1 interior, 0 boundary, -1 outside for each simplex (rows of vertex indices)."""
    cdef int d = len(query)
    cdef int m = len(simplices)
    if m == 0:
        return []
    cdef int64_t[:, ::1] c = _as_i64(coords, d)
    cdef int64_t[::1] q = np.ascontiguousarray(np.array(query, dtype=np.int64))
    cdef int32_t[:, ::1] s = np.ascontiguousarray(
        np.array(simplices, dtype=np.int32).reshape(m, d + 1))
    out = np.zeros(m, dtype=np.int8)
    cdef int8_t[::1] ov = out
    cdef int status
    cdef int n = len(coords)
    with nogil:
        status = hk_locate(&c[0, 0], n, d, &s[0, 0], m, &q[0], &ov[0])
    if status != HK_OK:
        _raise(status, [-1])
    return out.tolist()
