# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled multiplicative relation search; see ``_relation_py`` for the contract."""
from libc.math cimport fabs, floor, fmod, M_PI
from libc.stdlib cimport malloc, free


cdef inline double _wrap(double x) nogil:
    x = fmod(x, 2.0 * M_PI)
    if x > M_PI:
        x -= 2.0 * M_PI
    elif x <= -M_PI:
        x += 2.0 * M_PI
    return x


def find_relations(logs, args, double tlog, double targ, lo, hi, double tol):
    cdef Py_ssize_t n = len(logs)
    cdef Py_ssize_t last = n - 1
    cdef Py_ssize_t i
    cdef double *L = <double *> malloc(n * sizeof(double))
    cdef double *A = <double *> malloc(n * sizeof(double))
    cdef long long *LO = <long long *> malloc(n * sizeof(long long))
    cdef long long *HI = <long long *> malloc(n * sizeof(long long))
    cdef long long *M = <long long *> malloc(n * sizeof(long long))
    cdef double plog, parg, x, lz, az
    cdef long long r, c
    out = []
    try:
        for i in range(n):
            L[i] = logs[i]
            A[i] = args[i]
            LO[i] = lo[i]
            HI[i] = hi[i]
            if LO[i] > HI[i]:
                return out
        lz = L[last]
        az = A[last]
        for i in range(last):
            M[i] = LO[i]
        while True:
            plog = 0.0
            parg = 0.0
            for i in range(last):
                plog += M[i] * L[i]
                parg += M[i] * A[i]
            x = (tlog - plog) / lz
            r = <long long> floor(x + 0.5)
            for c in range(r - 1, r + 2):
                if c < LO[last] or c > HI[last]:
                    continue
                if fabs(plog + c * lz - tlog) >= tol:
                    continue
                if fabs(_wrap(parg + c * az - targ)) >= tol:
                    continue
                out.append(tuple([M[i] for i in range(last)]) + (c,))
            i = last - 1
            while i >= 0:
                if M[i] < HI[i]:
                    M[i] += 1
                    break
                M[i] = LO[i]
                i -= 1
            if i < 0:
                return out
    finally:
        free(L)
        free(A)
        free(LO)
        free(HI)
        free(M)
