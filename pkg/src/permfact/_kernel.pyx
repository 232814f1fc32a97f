# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled product kernel; see permfact._kernel_py for the reference twin."""

import numpy as np
from libc.stdint cimport int64_t

cdef enum:
    MAXN = 16


def pair_keys(const signed char[:, ::1] alphas, const signed char[:, ::1] betas, int m_sep):
    """Encoded statistics of ``alpha * beta`` for every row pair, alpha-major."""
    cdef Py_ssize_t A = alphas.shape[0]
    cdef Py_ssize_t B = betas.shape[0]
    cdef int n = <int>alphas.shape[1]
    if betas.shape[1] != n:
        raise ValueError("alpha and beta rows must have the same length")
    if n > 11 or m_sep > 6 or m_sep > n or m_sep < 0:
        raise ValueError("kernel supports n <= 11 and 0 <= m_sep <= min(n, 6)")
    out_arr = np.empty(A * B, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef int64_t sep_base = 1
    cdef int q
    for q in range(m_sep):
        sep_base *= m_sep
    cdef int prod[MAXN]
    cdef int label[MAXN]
    cdef int cnt[MAXN + 1]
    cdef int rgs[MAXN]
    cdef Py_ssize_t ia, ib
    cdef int x, y, L, c, ncyc, fixed, nxt
    cdef int64_t code, sep, mult
    with nogil:
        for ia in range(A):
            for ib in range(B):
                fixed = 0
                for x in range(n):
                    y = betas[ib, x]
                    prod[x] = alphas[ia, y]
                    label[x] = -1
                    if y == x and alphas[ia, x] == x:
                        fixed += 1
                for L in range(n + 1):
                    cnt[L] = 0
                ncyc = 0
                for x in range(n):
                    if label[x] < 0:
                        L = 0
                        y = x
                        while label[y] < 0:
                            label[y] = ncyc
                            y = prod[y]
                            L += 1
                        cnt[L] += 1
                        ncyc += 1
                code = 0
                L = n
                while L >= 1:
                    for c in range(cnt[L]):
                        code = code * (n + 1) + L
                    L -= 1
                for c in range(ncyc):
                    rgs[c] = -1
                nxt = 0
                sep = 0
                mult = 1
                for x in range(m_sep):
                    c = label[x]
                    if rgs[c] < 0:
                        rgs[c] = nxt
                        nxt += 1
                    sep += rgs[c] * mult
                    mult *= m_sep
                out[ia * B + ib] = (code * (n + 1) + fixed) * sep_base + sep
    return out_arr
