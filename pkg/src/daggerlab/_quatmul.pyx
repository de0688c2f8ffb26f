# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loop for quaternion matrix products.

Operands are (rows, cols, 4) float64 arrays of raw quaternion components.
A single fused loop avoids the sixteen separate BLAS dispatches the numpy
fallback needs, which dominates at the small matrix sizes the campaigns
run on.
"""

import numpy as np


def quat_matmul(double[:, :, ::1] a, double[:, :, ::1] b):
    """Hamilton-product matrix multiply: (m,k,4) x (k,n,4) -> (m,n,4)."""
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t k = a.shape[1]
    cdef Py_ssize_t n = b.shape[1]
    if b.shape[0] != k:
        raise ValueError("inner dimensions do not match")

    out = np.zeros((m, n, 4), dtype=np.float64)
    cdef double[:, :, ::1] c = out
    cdef Py_ssize_t i, j, l
    cdef double aw, ax, ay, az, bw, bx, by, bz

    for i in range(m):
        for l in range(k):
            aw = a[i, l, 0]
            ax = a[i, l, 1]
            ay = a[i, l, 2]
            az = a[i, l, 3]
            for j in range(n):
                bw = b[l, j, 0]
                bx = b[l, j, 1]
                by = b[l, j, 2]
                bz = b[l, j, 3]
                c[i, j, 0] += aw * bw - ax * bx - ay * by - az * bz
                c[i, j, 1] += aw * bx + ax * bw + ay * bz - az * by
                c[i, j, 2] += aw * by - ax * bz + ay * bw + az * bx
                c[i, j, 3] += aw * bz + ax * by - ay * bx + az * bw
    return out
