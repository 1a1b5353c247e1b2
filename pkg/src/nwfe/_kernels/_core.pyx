# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled per-class-pair kernel; computes the same quantities as
``_numpy.pair_stats`` (see its docstring for the contract)."""

import numpy as np

from libc.math cimport sqrt

NAME = "compiled"


def pair_stats(x_i, x_j, d_ij, bint self_pair):
    cdef double[:, ::1] xi = np.ascontiguousarray(x_i, dtype=np.float64)
    cdef double[:, ::1] xj = np.ascontiguousarray(x_j, dtype=np.float64)
    cdef double[:, ::1] d = np.ascontiguousarray(d_ij, dtype=np.float64)
    cdef Py_ssize_t ni = d.shape[0], nj = d.shape[1], p = xi.shape[1]
    cdef Py_ssize_t l, k, a, b
    cdef Py_ssize_t nzero
    cdef double total, val, c, da

    if self_pair and ni < 2:
        raise ValueError("self pair needs at least two samples")

    w_arr = np.zeros((ni, nj), dtype=np.float64)
    m_arr = np.zeros((ni, p), dtype=np.float64)
    lam_arr = np.empty(ni, dtype=np.float64)
    dmean_arr = np.empty(ni, dtype=np.float64)
    diff_arr = np.empty((ni, p), dtype=np.float64)
    block_arr = np.zeros((p, p), dtype=np.float64)
    cdef double[:, ::1] w = w_arr
    cdef double[:, ::1] m = m_arr
    cdef double[::1] lam = lam_arr
    cdef double[::1] dmean = dmean_arr
    cdef double[:, ::1] diff = diff_arr
    cdef double[:, ::1] block = block_arr

    for l in range(ni):
        # inverse-distance weights over the target class, uniform split on
        # exact zeros, self entry excluded for within-class pairs
        nzero = 0
        for k in range(nj):
            if self_pair and k == l:
                continue
            if d[l, k] == 0.0:
                nzero += 1
        if nzero > 0:
            val = 1.0 / nzero
            for k in range(nj):
                if self_pair and k == l:
                    continue
                if d[l, k] == 0.0:
                    w[l, k] = val
        else:
            total = 0.0
            for k in range(nj):
                if self_pair and k == l:
                    continue
                total += 1.0 / d[l, k]
            for k in range(nj):
                if self_pair and k == l:
                    continue
                w[l, k] = (1.0 / d[l, k]) / total

        for k in range(nj):
            val = w[l, k]
            if val != 0.0:
                for a in range(p):
                    m[l, a] += val * xj[k, a]

        total = 0.0
        for a in range(p):
            da = xi[l, a] - m[l, a]
            diff[l, a] = da
            total += da * da
        dmean[l] = sqrt(total)

    nzero = 0
    for l in range(ni):
        if dmean[l] == 0.0:
            nzero += 1
    if nzero > 0:
        val = 1.0 / nzero
        for l in range(ni):
            lam[l] = val if dmean[l] == 0.0 else 0.0
    else:
        total = 0.0
        for l in range(ni):
            total += 1.0 / dmean[l]
        for l in range(ni):
            lam[l] = (1.0 / dmean[l]) / total

    # upper triangle then mirror, so the block is exactly symmetric
    for l in range(ni):
        c = lam[l]
        if c == 0.0:
            continue
        for a in range(p):
            da = diff[l, a]
            for b in range(a, p):
                block[a, b] += c * (da * diff[l, b])
    for a in range(p):
        for b in range(a + 1, p):
            block[b, a] = block[a, b]

    return w_arr, m_arr, lam_arr, block_arr
