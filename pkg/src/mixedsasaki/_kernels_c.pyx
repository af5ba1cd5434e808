# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exterior-algebra kernels (float64 only).

Same contracts as ``_kernels_py``; the Python wrappers in ``kernels`` pass
the index tables from ``_tables``.
"""

import numpy as np
from libc.math cimport fabs

from . import _tables

NAME = "cython"


cdef inline int _popcount(unsigned long long x) noexcept nogil:
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef inline int _inversion_parity(unsigned long long ma, unsigned long long mb) noexcept nogil:
    cdef unsigned long long t = mb, low
    cdef int inv = 0
    while t:
        low = t & (~t + 1)
        inv += _popcount(ma & ~((low << 1) - 1))
        t ^= low
    return inv & 1


cdef void _wedge(const long long[::1] ma, const double[::1] a,
                 const long long[::1] mb, const double[::1] b,
                 const long long[::1] pos, double[::1] out) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef double ca, cb
    cdef unsigned long long x, y
    for i in range(ma.shape[0]):
        ca = a[i]
        if ca == 0.0:
            continue
        x = <unsigned long long>ma[i]
        for j in range(mb.shape[0]):
            cb = b[j]
            if cb == 0.0:
                continue
            y = <unsigned long long>mb[j]
            if x & y:
                continue
            if _inversion_parity(x, y):
                out[pos[x | y]] -= ca * cb
            else:
                out[pos[x | y]] += ca * cb


def wedge(int m, int p, int q, a, b):
    cdef Py_ssize_t size = len(_tables.combos(m, p + q)) if p + q <= m else 0
    out = np.zeros(size, dtype=np.float64)
    if size == 0:
        return out
    _wedge(_tables.masks(m, p), np.ascontiguousarray(a, dtype=np.float64),
           _tables.masks(m, q), np.ascontiguousarray(b, dtype=np.float64),
           _tables.position(m, p + q), out)
    return out


cdef double _det(double[:, ::1] w, int n) noexcept nogil:
    """Determinant by Gaussian elimination with partial pivoting (destroys w)."""
    cdef int i, j, k, piv
    cdef double det = 1.0, best, f, tmp
    for k in range(n):
        piv = k
        best = fabs(w[k, k])
        for i in range(k + 1, n):
            if fabs(w[i, k]) > best:
                best = fabs(w[i, k])
                piv = i
        if best == 0.0:
            return 0.0
        if piv != k:
            for j in range(n):
                tmp = w[k, j]
                w[k, j] = w[piv, j]
                w[piv, j] = tmp
            det = -det
        det *= w[k, k]
        for i in range(k + 1, n):
            f = w[i, k] / w[k, k]
            if f != 0.0:
                for j in range(k + 1, n):
                    w[i, j] -= f * w[k, j]
    return det


cdef void _evaluate(const long long[:, ::1] combos, const double[::1] coeffs,
                    const double[:, :, ::1] vecs, double[:, ::1] work,
                    double[::1] out) noexcept nogil:
    cdef Py_ssize_t bi, k, r, c
    cdef int p = combos.shape[1]
    cdef double total, coef
    for bi in range(vecs.shape[0]):
        total = 0.0
        for k in range(combos.shape[0]):
            coef = coeffs[k]
            if coef == 0.0:
                continue
            for r in range(p):
                for c in range(p):
                    work[r, c] = vecs[bi, r, combos[k, c]]
            total += coef * _det(work, p)
        out[bi] = total


def evaluate(int m, int p, coeffs, vecs):
    cdef Py_ssize_t nb = vecs.shape[0]
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    if p == 0:
        return np.full(nb, coeffs[0])
    vecs = np.ascontiguousarray(vecs, dtype=np.float64)
    if p == 1:
        return vecs[:, 0, :] @ coeffs
    out = np.empty(nb, dtype=np.float64)
    work = np.empty((p, p), dtype=np.float64)
    _evaluate(_tables.combos(m, p), coeffs, vecs, work, out)
    return out
