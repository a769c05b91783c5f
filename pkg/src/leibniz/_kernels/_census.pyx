# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled census kernels: left Leibniz identity over GF(p) on raw tables.

A table is the flat tuple ``c[(i*n + j)*n + k]`` of structure constants; its
index is that tuple read as a base-``p`` number, most significant digit first.
"""

import numpy as np
cimport numpy as cnp

DEF MAXN3 = 64


cdef inline bint _leibniz(const long *c, long p, int n) nogil:
    cdef int i, j, k, l, m
    cdef long s
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    s = 0
                    for m in range(n):
                        # e_i(e_j e_k) - (e_i e_j) e_k - e_j(e_i e_k), coordinate l
                        s += c[(j*n + k)*n + m] * c[(i*n + m)*n + l]
                        s -= c[(i*n + j)*n + m] * c[(m*n + k)*n + l]
                        s -= c[(i*n + k)*n + m] * c[(j*n + m)*n + l]
                    if s % p != 0:
                        return 0
    return 1


def filter_range(long p, int n, long long start, long long stop):
    """Indices in ``[start, stop)`` whose tables satisfy the identity."""
    cdef int N = n * n * n
    cdef long c[MAXN3]
    cdef long long idx, rem
    cdef int d
    cdef long long cap = 1024
    cdef long long count = 0
    if N > MAXN3:
        raise ValueError("dimension too large for the compiled kernel")
    out = np.empty(cap, dtype=np.int64)
    cdef cnp.int64_t[::1] view = out
    rem = start
    for d in range(N - 1, -1, -1):
        c[d] = rem % p
        rem //= p
    idx = start
    while idx < stop:
        if _leibniz(c, p, n):
            if count == cap:
                cap *= 2
                out = np.resize(out, cap)
                view = out
            view[count] = idx
            count += 1
        idx += 1
        d = N - 1
        while d >= 0:
            c[d] += 1
            if c[d] < p:
                break
            c[d] = 0
            d -= 1
    return out[:count].copy()


def check_tables(long p, int n, tables):
    """Boolean mask: which rows of the ``(count, n**3)`` array satisfy the identity."""
    cdef int N = n * n * n
    cdef cnp.int64_t[:, ::1] t = np.ascontiguousarray(tables, dtype=np.int64)
    cdef Py_ssize_t r, count = t.shape[0]
    cdef long c[MAXN3]
    cdef int d
    if N > MAXN3:
        raise ValueError("dimension too large for the compiled kernel")
    if count and t.shape[1] != N:
        raise ValueError("table width must be n**3")
    mask = np.zeros(count, dtype=np.bool_)
    cdef cnp.npy_bool[::1] mv = mask
    for r in range(count):
        for d in range(N):
            c[d] = ((t[r, d] % p) + p) % p
        mv[r] = _leibniz(c, p, n)
    return mask
