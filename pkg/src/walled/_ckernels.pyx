# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def basis_permutation(images, Py_ssize_t d):
    cdef const cnp.int64_t[::1] img = np.ascontiguousarray(images, dtype=np.int64)
    cdef Py_ssize_t n = img.shape[0]
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    cdef Py_ssize_t total = d ** n
    cdef cnp.int64_t[::1] cols = np.empty(total, dtype=np.int64)
    cdef cnp.int64_t[::1] digits = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] weight = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] stride = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t j, k, idx = 0
    weight[n - 1] = 1
    for k in range(n - 2, -1, -1):
        weight[k] = weight[k + 1] * d
    # target digit t feeds source factor k with images[k] = t + 1
    for k in range(n):
        stride[img[k] - 1] = weight[k]
    for j in range(total):
        cols[j] = idx
        # odometer step over the target digits, last factor fastest
        k = n - 1
        while k >= 0:
            digits[k] += 1
            idx += stride[k]
            if digits[k] < d:
                break
            idx -= stride[k] * d
            digits[k] = 0
            k -= 1
    return np.asarray(cols)


def scatter_blocks(double[:, ::1] out, const double[:, :, ::1] table, block_ids,
                   row_legs, col_legs, weights):
    cdef const cnp.int64_t[::1] ids = np.ascontiguousarray(block_ids, dtype=np.int64)
    cdef const cnp.int64_t[::1] rows = np.ascontiguousarray(row_legs, dtype=np.int64)
    cdef const cnp.int64_t[::1] cols = np.ascontiguousarray(col_legs, dtype=np.int64)
    cdef const double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t m = table.shape[1]
    cdef Py_ssize_t t, p, q, r0, c0, b
    cdef double wt
    for t in range(ids.shape[0]):
        wt = w[t]
        if wt == 0.0:
            continue
        b = ids[t]
        r0 = rows[t] * m
        c0 = cols[t] * m
        for p in range(m):
            for q in range(m):
                out[r0 + p, c0 + q] += wt * table[b, p, q]
    return np.asarray(out)


def grid_min_eig(weights, block_terms, scalar_terms):
    cdef const double[:, ::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef const double[:, ::1] bt = np.ascontiguousarray(block_terms, dtype=np.float64)
    cdef const double[:, ::1] st = np.ascontiguousarray(scalar_terms, dtype=np.float64)
    cdef Py_ssize_t npts = w.shape[0], nk = w.shape[1], ns = st.shape[1]
    cdef double[::1] out = np.empty(npts, dtype=np.float64)
    cdef Py_ssize_t p, k, s
    cdef double a, b, c, half, diff, lam, val
    for p in range(npts):
        a = 0.0
        b = 0.0
        c = 0.0
        for k in range(nk):
            a += w[p, k] * bt[k, 0]
            b += w[p, k] * bt[k, 1]
            c += w[p, k] * bt[k, 2]
        half = 0.5 * (a + b)
        diff = 0.5 * (a - b)
        lam = half - sqrt(diff * diff + c * c)
        for s in range(ns):
            val = 0.0
            for k in range(nk):
                val += w[p, k] * st[k, s]
            if val < lam:
                lam = val
        out[p] = lam
    return np.asarray(out)
