# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p elimination kernels.

Entries must be reduced into [0, p) with p < 2**31, so every product
fits comfortably in a signed 64-bit word.  Matrices are int64 numpy
arrays owned by the caller; rank_mod and rref_mod mutate their input.
"""

import numpy as np


cdef inline long long _inv_mod(long long a, long long p):
    # Fermat inverse; p is prime and a is nonzero mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rank_mod(long long[:, :] a, long long p):
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = _inv_mod(a[r, c], p)
        for i in range(r + 1, m):
            if a[i, c] != 0:
                f = (a[i, c] * inv) % p
                for j in range(c, n):
                    t = a[i, j] - (f * a[r, j]) % p
                    if t < 0:
                        t += p
                    a[i, j] = t
        r += 1
    return r


def rref_mod(long long[:, :] a, long long p):
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = _inv_mod(a[r, c], p)
        for j in range(c, n):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            f = a[i, c]
            if i != r and f != 0:
                for j in range(c, n):
                    t = a[i, j] - (f * a[r, j]) % p
                    if t < 0:
                        t += p
                    a[i, j] = t
        pivots.append(c)
        r += 1
    return pivots


def gram_mod(long long[:, :] a, long long p):
    cdef Py_ssize_t d = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    out = np.zeros((n, n), dtype=np.int64)
    cdef long long[:, :] g = out
    cdef Py_ssize_t i, j, k
    cdef long long s
    for j in range(n):
        for k in range(j, n):
            s = 0
            for i in range(d):
                s = (s + a[i, j] * a[i, k]) % p
            g[j, k] = s
            g[k, j] = s
    return out
