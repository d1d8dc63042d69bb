"""Pure-Python kernels: sign cocycles and fraction-free integer elimination.

This module mirrors the API of the optional compiled extension ``ealie._kernel``;
``ealie.kernel`` picks one of the two at import time.  Everything here is exact
integer arithmetic.

Sign kernels operate on a rank-``nu`` lattice with a symmetric matrix ``q`` of
entries +-1 (q[i][i] = 1), passed flattened row-major as ``qflat``.  Exponents
only matter mod 2 because every q entry squares to 1.
"""

from math import gcd

BACKEND = "python"


def kappa(sigma, qflat, nu):
    """Self-commutation sign: product of q[i][j]**(sigma[i]*sigma[j]) over i<j."""
    s = 1
    for i in range(nu - 1):
        ni = sigma[i]
        if ni & 1 == 0:
            continue
        base = i * nu
        for j in range(i + 1, nu):
            if sigma[j] & 1 and qflat[base + j] < 0:
                s = -s
    return s


def g_cocycle(sigma, tau, nu, qflat):
    """Bilinear sign g(sigma, tau): product of q[i][j]**(sigma[i]*tau[j]) over i<j."""
    s = 1
    for i in range(nu - 1):
        ni = sigma[i]
        if ni & 1 == 0:
            continue
        base = i * nu
        for j in range(i + 1, nu):
            if tau[j] & 1 and qflat[base + j] < 0:
                s = -s
    return s


def structure_constant(sigma, tau, nu, qflat):
    """Normal-ordering sign c(sigma, tau): product of q[i][j]**(sigma[j]*tau[i]) over i<j.

    Collecting t^sigma t^tau into the canonical generator order moves tau's i-th
    generator block past sigma's j-th block once per crossing pair (i < j), and
    each crossing contributes one factor q[i][j].  Equal to g(tau, sigma).
    """
    s = 1
    for i in range(nu - 1):
        mi = tau[i]
        if mi & 1 == 0:
            continue
        base = i * nu
        for j in range(i + 1, nu):
            if sigma[j] & 1 and qflat[base + j] < 0:
                s = -s
    return s


def _row_gcd(row, start, ncols):
    g = 0
    for j in range(start, ncols):
        v = row[j]
        if v:
            g = gcd(g, v if v > 0 else -v)
            if g == 1:
                return 1
    return g


def int_echelon(rows, ncols, pivot_limit=-1):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(work, pivots)`` where ``work`` is a new list of rows (input rows
    are not mutated) and ``pivots`` the pivot column indices in order.  Pivot
    search is restricted to columns < ``pivot_limit`` (default: all columns), so
    augmented systems [A | b] can forbid pivots inside b.  Each row is divided
    by its content and pivot entries are normalized positive, which keeps entry
    growth polynomial.
    """
    if pivot_limit < 0:
        pivot_limit = ncols
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots = []
    pr = 0
    for col in range(pivot_limit):
        if pr == nrows:
            break
        sel = -1
        for r in range(pr, nrows):
            if work[r][col]:
                sel = r
                break
        if sel < 0:
            continue
        if sel != pr:
            work[pr], work[sel] = work[sel], work[pr]
        piv = work[pr]
        if piv[col] < 0:
            for j in range(col, ncols):
                piv[j] = -piv[j]
        g = _row_gcd(piv, col, ncols)
        if g > 1:
            for j in range(col, ncols):
                piv[j] //= g
        p = piv[col]
        for r in range(pr + 1, nrows):
            row = work[r]
            v = row[col]
            if v:
                for j in range(col, ncols):
                    row[j] = row[j] * p - piv[j] * v
                g = _row_gcd(row, col, ncols)
                if g > 1:
                    for j in range(col, ncols):
                        row[j] //= g
        pivots.append(col)
        pr += 1
    return work, pivots


def int_rank(rows, ncols):
    """Rank of an integer matrix over the rationals."""
    return len(int_echelon(rows, ncols)[1])
