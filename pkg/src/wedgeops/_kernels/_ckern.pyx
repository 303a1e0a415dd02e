# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: triangle multiplicities and cyclic Jacobi sweeps."""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

BACKEND = "compiled"


def edge_triangle_arcs(cnp.int64_t[::1] indptr, cnp.int64_t[::1] indices):
    """Per-arc triangle multiplicities via sorted-neighbor merge intersection."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.zeros(indices.shape[0], dtype=np.int64)
    cdef cnp.int64_t[::1] t = out
    cdef Py_ssize_t u, k, kk
    cdef cnp.int64_t v, c, i, j, hi_u, hi_v, lo, hi, mid, x, y
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if v <= u:
                continue
            # merge-count common neighbors of u and v
            i = indptr[u]
            j = indptr[v]
            hi_u = indptr[u + 1]
            hi_v = indptr[v + 1]
            c = 0
            while i < hi_u and j < hi_v:
                x = indices[i]
                y = indices[j]
                if x == y:
                    c += 1
                    i += 1
                    j += 1
                elif x < y:
                    i += 1
                else:
                    j += 1
            t[k] = c
            # binary search for the reverse arc v -> u
            lo = indptr[v]
            hi = indptr[v + 1]
            while lo < hi:
                mid = (lo + hi) >> 1
                if indices[mid] < u:
                    lo = mid + 1
                else:
                    hi = mid
            t[lo] = c
    return out


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) noexcept:
    cdef double acc = 0.0
    cdef Py_ssize_t p, q
    for p in range(n):
        for q in range(n):
            if p != q:
                acc += a[p, q] * a[p, q]
    return sqrt(acc)


def jacobi_sweeps(double[:, ::1] a, double[:, ::1] v, double tol, int max_sweeps):
    """Cyclic Jacobi rotations on symmetric a (in place), accumulating into v.

    Pivots below off/(n*n) are skipped per sweep. Returns
    (sweeps_used, final_off_norm); stops when off <= tol.
    """
    cdef Py_ssize_t n = a.shape[0]
    if n < 2:
        return 0, 0.0
    cdef double off = _off_norm(a, n)
    cdef int sweeps = 0
    cdef Py_ssize_t p, q, k
    cdef double thresh, apq, app, aqq, theta, t, c, s, akp, akq
    while off > tol and sweeps < max_sweeps:
        thresh = off / (<double> n * <double> n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    a[p, k] = a[k, p]
                    a[q, k] = a[k, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    akp = v[k, p]
                    akq = v[k, q]
                    v[k, p] = c * akp - s * akq
                    v[k, q] = s * akp + c * akq
        off = _off_norm(a, n)
        sweeps += 1
    return sweeps, off
