"""Pure-Python hot kernels.

Mirrors ``_ckernels.pyx`` line for line; ``apolar.kernels`` picks one at import.
"""

import cmath
import math


def ff_gauss_jordan(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over Python ints.

    Returns ``(matrix, pivots, det)``. Every pivot row ends with its pivot
    entry equal to ``det`` (the last pivot), and every entry stays an integer
    minor of the input, so the reduced row echelon form is ``matrix / det``.
    The input is not modified.
    """
    m = [list(r) for r in rows]
    n = len(m)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == n:
            break
        p = r
        while p < n and m[p][c] == 0:
            p += 1
        if p == n:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        prow = m[r]
        pv = prow[c]
        for i in range(n):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            # rows below are zero left of c; rows above are not
            start = c if i > r else 0
            if f == 0:
                if pv != prev:
                    for j in range(start, ncols):
                        if row[j]:
                            row[j] = (pv * row[j]) // prev
                continue
            for j in range(start, ncols):
                row[j] = (pv * row[j] - f * prow[j]) // prev
        prev = pv
        pivots.append(c)
        r += 1
    return m, pivots, prev


def aberth(coeffs, tol=1e-14, maxiter=500):
    """Simultaneous Aberth-Ehrlich iteration for all roots of a polynomial.

    ``coeffs`` are complex, highest degree first, leading entry nonzero.
    Returns ``(roots, iterations, converged)``.
    """
    n = len(coeffs) - 1
    if n < 1:
        return [], 0, True
    lead = coeffs[0]
    a = [c / lead for c in coeffs]
    da = [a[i] * (n - i) for i in range(n)]
    radius = 1.0 + max(abs(c) for c in a[1:])
    # Fujiwara-style bound keeps the start circle near the root moduli
    fuj = 0.0
    for i in range(1, n + 1):
        v = abs(a[i]) ** (1.0 / i)
        if v > fuj:
            fuj = v
    radius = min(radius, 2.0 * fuj) if fuj > 0 else 1.0
    z = [radius * 0.5 * cmath.exp(1j * (2.0 * math.pi * i / n + 0.4)) for i in range(n)]
    it = 0
    converged = False
    while it < maxiter:
        it += 1
        biggest = 0.0
        for i in range(n):
            zi = z[i]
            pv = a[0]
            for c in a[1:]:
                pv = pv * zi + c
            dpv = da[0]
            for c in da[1:]:
                dpv = dpv * zi + c
            if pv == 0:
                continue
            s = 0j
            for j in range(n):
                if j != i:
                    s += 1.0 / (zi - z[j])
            ratio = pv / dpv if dpv != 0 else pv
            w = ratio / (1.0 - ratio * s)
            z[i] = zi - w
            aw = abs(w) / max(1.0, abs(zi))
            if aw > biggest:
                biggest = aw
        if biggest < tol:
            converged = True
            break
    return z, it, converged
