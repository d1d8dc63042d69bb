# cython: boundscheck=False, wraparound=False
"""Compiled kernels: sign cocycles and fraction-free integer elimination.

Mirrors the API of ``ealie._kernel_py``; see that module for semantics.
Exponent parities and sign flags are lowered to C integers, while elimination
entries stay arbitrary-precision Python ints.
"""

from math import gcd

BACKEND = "compiled"

DEF MAXNU = 64


cdef int _load(sigma, qflat, Py_ssize_t nu, int *par, signed char *neg) except -1:
    cdef Py_ssize_t i, j
    if nu > MAXNU:
        raise ValueError("lattice rank too large for compiled kernel")
    for i in range(nu):
        par[i] = <int> (sigma[i] & 1)
    for i in range(nu - 1):
        for j in range(i + 1, nu):
            neg[i * nu + j] = 1 if qflat[i * nu + j] < 0 else 0
    return 0


def kappa(sigma, qflat, Py_ssize_t nu):
    """Self-commutation sign: product of q[i][j]**(sigma[i]*sigma[j]) over i<j."""
    cdef int par[MAXNU]
    cdef signed char neg[MAXNU * MAXNU]
    cdef Py_ssize_t i, j
    cdef int s = 1
    _load(sigma, qflat, nu, par, neg)
    for i in range(nu - 1):
        if par[i]:
            for j in range(i + 1, nu):
                if par[j] and neg[i * nu + j]:
                    s = -s
    return s


def g_cocycle(sigma, tau, Py_ssize_t nu, qflat):
    """Bilinear sign g(sigma, tau): product of q[i][j]**(sigma[i]*tau[j]) over i<j."""
    cdef int par[MAXNU]
    cdef int tpar[MAXNU]
    cdef signed char neg[MAXNU * MAXNU]
    cdef Py_ssize_t i, j
    cdef int s = 1
    _load(sigma, qflat, nu, par, neg)
    for i in range(nu):
        tpar[i] = <int> (tau[i] & 1)
    for i in range(nu - 1):
        if par[i]:
            for j in range(i + 1, nu):
                if tpar[j] and neg[i * nu + j]:
                    s = -s
    return s


def structure_constant(sigma, tau, Py_ssize_t nu, qflat):
    """Normal-ordering sign c(sigma, tau) = g(tau, sigma); see the pure twin."""
    return g_cocycle(tau, sigma, nu, qflat)


cdef object _row_gcd(list row, Py_ssize_t start, Py_ssize_t ncols):
    cdef Py_ssize_t j
    g = 0
    for j in range(start, ncols):
        v = row[j]
        if v:
            g = gcd(g, -v if v < 0 else v)
            if g == 1:
                return g
    return g


def int_echelon(rows, Py_ssize_t ncols, Py_ssize_t pivot_limit=-1):
    """Fraction-free row echelon form; same contract as the pure twin."""
    cdef Py_ssize_t nrows, pr, col, r, j, sel
    if pivot_limit < 0:
        pivot_limit = ncols
    cdef list work = [list(r_) for r_ in rows]
    nrows = len(work)
    pivots = []
    pr = 0
    cdef list piv, row
    for col in range(pivot_limit):
        if pr == nrows:
            break
        sel = -1
        for r in range(pr, nrows):
            if (<list> work[r])[col]:
                sel = r
                break
        if sel < 0:
            continue
        if sel != pr:
            work[pr], work[sel] = work[sel], work[pr]
        piv = <list> work[pr]
        if piv[col] < 0:
            for j in range(col, ncols):
                piv[j] = -piv[j]
        g = _row_gcd(piv, col, ncols)
        if g > 1:
            for j in range(col, ncols):
                piv[j] = piv[j] // g
        p = piv[col]
        for r in range(pr + 1, nrows):
            row = <list> work[r]
            v = row[col]
            if v:
                for j in range(col, ncols):
                    row[j] = row[j] * p - piv[j] * v
                g = _row_gcd(row, col, ncols)
                if g > 1:
                    for j in range(col, ncols):
                        row[j] = row[j] // g
        pivots.append(col)
        pr += 1
    return work, pivots


def int_rank(rows, Py_ssize_t ncols):
    """Rank of an integer matrix over the rationals."""
    return len(int_echelon(rows, ncols)[1])
