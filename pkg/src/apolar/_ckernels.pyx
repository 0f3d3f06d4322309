# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_kernels_py``."""

from libc.math cimport sqrt, pow, fabs, cos, sin, M_PI
from libc.stdlib cimport malloc, free


cdef inline double cabs_(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


def ff_gauss_jordan(rows, Py_ssize_t ncols):
    cdef list m = [list(src) for src in rows]
    cdef Py_ssize_t n = len(m)
    cdef Py_ssize_t r = 0, c, p, i, j, start
    cdef list prow, row
    cdef object prev = 1, pv, f, x
    cdef list pivots = []
    for c in range(ncols):
        if r == n:
            break
        p = r
        while p < n and (<list>m[p])[c] == 0:
            p += 1
        if p == n:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        prow = <list>m[r]
        pv = prow[c]
        for i in range(n):
            if i == r:
                continue
            row = <list>m[i]
            f = row[c]
            start = c if i > r else 0
            if f == 0:
                if pv != prev:
                    for j in range(start, ncols):
                        x = row[j]
                        if x:
                            row[j] = (pv * x) // prev
                continue
            for j in range(start, ncols):
                row[j] = (pv * row[j] - f * prow[j]) // prev
        prev = pv
        pivots.append(c)
        r += 1
    return m, pivots, prev


def aberth(coeffs, double tol=1e-14, int maxiter=500):
    cdef Py_ssize_t n = len(coeffs) - 1
    cdef Py_ssize_t i, j
    if n < 1:
        return [], 0, True
    cdef double complex *a = <double complex *>malloc((n + 1) * sizeof(double complex))
    cdef double complex *da = <double complex *>malloc(n * sizeof(double complex))
    cdef double complex *z = <double complex *>malloc(n * sizeof(double complex))
    cdef double complex lead = complex(coeffs[0])
    cdef double complex zi, pv, dpv, s, ratio, w
    cdef double radius = 0.0, fuj = 0.0, v, aw, biggest, ang
    cdef int it = 0
    cdef bint converged = False
    try:
        for i in range(n + 1):
            a[i] = complex(coeffs[i]) / lead
        for i in range(n):
            da[i] = a[i] * (n - i)
        for i in range(1, n + 1):
            v = cabs_(a[i])
            if v > radius:
                radius = v
            v = pow(v, 1.0 / i)
            if v > fuj:
                fuj = v
        radius = 1.0 + radius
        if fuj > 0:
            if 2.0 * fuj < radius:
                radius = 2.0 * fuj
        else:
            radius = 1.0
        for i in range(n):
            ang = 2.0 * M_PI * i / n + 0.4
            z[i] = radius * 0.5 * (cos(ang) + 1j * sin(ang))
        with nogil:
            while it < maxiter:
                it += 1
                biggest = 0.0
                for i in range(n):
                    zi = z[i]
                    pv = a[0]
                    for j in range(1, n + 1):
                        pv = pv * zi + a[j]
                    dpv = da[0]
                    for j in range(1, n):
                        dpv = dpv * zi + da[j]
                    if pv == 0:
                        continue
                    s = 0
                    for j in range(n):
                        if j != i:
                            s = s + 1.0 / (zi - z[j])
                    if dpv != 0:
                        ratio = pv / dpv
                    else:
                        ratio = pv
                    w = ratio / (1.0 - ratio * s)
                    z[i] = zi - w
                    v = cabs_(zi)
                    aw = cabs_(w) / (v if v > 1.0 else 1.0)
                    if aw > biggest:
                        biggest = aw
                if biggest < tol:
                    converged = True
                    break
        return [z[i] for i in range(n)], it, converged
    finally:
        free(a)
        free(da)
        free(z)
