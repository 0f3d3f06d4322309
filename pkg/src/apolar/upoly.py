"""Dense univariate polynomials over the rationals.

A polynomial is a list of ``Fraction`` coefficients, highest degree first,
with no leading zeros. The zero polynomial is ``[]``.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

Poly = list


def trim(p) -> Poly:
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return [Fraction(c) for c in p[i:]]


def degree(p: Poly) -> int:
    return len(p) - 1


def derivative(p: Poly) -> Poly:
    n = len(p) - 1
    return trim([c * (n - i) for i, c in enumerate(p[:-1])])


def evaluate(p: Poly, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def monic(p: Poly) -> Poly:
    if not p:
        return []
    lead = p[0]
    return [c / lead for c in p]


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [], trim(num)
    quot = []
    lead = den[0]
    for i in range(len(num) - dn):
        q = num[i] / lead
        quot.append(q)
        if q:
            for j in range(1, dn + 1):
                num[i + j] -= q * den[j]
    return trim(quot), trim(num[len(num) - dn:]) if dn else []


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; ``gcd([], []) == []``."""
    a, b = trim(p), trim(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, monic(r)
    return monic(a)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def primitive(p: Poly) -> list[int]:
    """Integer multiple of ``p`` with content 1 and positive leading entry."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[0] < 0:
        g = -g
    return [c // g for c in ints]


def _divisors(n: int, limit: int = 10**7) -> list[int] | None:
    n = abs(n)
    small = []
    large = []
    i = 1
    while i * i <= n:
        if i > limit:
            return None
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots of a nonzero polynomial, sorted.

    Candidates come from the rational root theorem. When a coefficient is
    too large to factor by trial division, candidates are taken from the
    real numeric roots instead; either way every root is confirmed exactly.
    """
    ints = primitive(p)
    if len(ints) <= 1:
        return []
    roots = set()
    # strip the root at zero
    while ints and ints[-1] == 0:
        roots.add(Fraction(0))
        ints = ints[:-1]
    if len(ints) <= 1:
        return sorted(roots)
    lead, const = ints[0], ints[-1]
    nums = _divisors(const)
    dens = _divisors(lead)
    if nums is not None and dens is not None and len(nums) * len(dens) <= 20000:
        cands = {Fraction(s * a, b) for a in nums for b in dens for s in (1, -1)}
    else:
        cands = set()
        for z in np.roots([float(c) for c in ints]):
            if abs(z.imag) <= 1e-6 * max(1.0, abs(z)):
                cands.add(Fraction(float(z.real)).limit_denominator(abs(lead)))
    fr = [Fraction(c) for c in ints]
    for x in cands:
        if evaluate(fr, x) == 0:
            roots.add(x)
    return sorted(roots)
