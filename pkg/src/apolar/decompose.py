"""Explicit simultaneous Waring decompositions from squarefree apolar forms.

A root ``[p:q]`` of the apolar dual form gives the linear form
``p*x0 + q*x1``; the dual factor ``q*y0 - p*y1`` kills its powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels, upoly
from .apolarity import DEFAULT_BUDGET, check_independent, vsps
from .forms import BinaryForm, DualForm, ProjectivePoint, expand_power_sum, squarefree_test
from .linalg import RationalMatrix, solve_linear

ROOT_TOL = 1e-10
RECON_TOL = 1e-8
MAX_ITER = 500


class NumericRootError(ArithmeticError):
    """The numeric root iteration did not converge or failed verification."""


class NotSquarefreeError(ValueError):
    pass


class EmptyDecompositionError(LookupError):
    """No squarefree apolar form of the requested degree: no decomposition with that many terms."""


@dataclass(frozen=True)
class RootSet:
    points: tuple
    residual: float = 0.0

    @property
    def exact(self) -> bool:
        return all(p.exact for p in self.points)

    @property
    def multiplicity_free(self) -> bool:
        return len(set(self.points)) == len(self.points)

    def __len__(self):
        return len(self.points)


def _quadratic_roots(g) -> list[Fraction] | None:
    a, b, c = g
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    num, den = disc.numerator, disc.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    s = Fraction(rn, rd)
    return [(-b + s) / (2 * a), (-b - s) / (2 * a)]


def _residual(D: DualForm, pts) -> float:
    """Max of ``|D(p, q)|`` over unit-norm points, with ``D`` scaled to max coefficient 1."""
    scale = max(abs(c) for c in D.coeffs)
    cs = [complex(c / scale) for c in D.coeffs]
    k = D.degree
    worst = 0.0
    for pt in pts:
        p, q = complex(pt.p), complex(pt.q)
        n = math.hypot(abs(p), abs(q))
        p, q = p / n, q / n
        v = sum(c * p ** (k - i) * q**i for i, c in enumerate(cs))
        worst = max(worst, abs(v))
    return worst


def _sort_points(points) -> tuple:
    exact = sorted((p for p in points if p.exact), key=lambda p: (p.p, p.q))
    numeric = sorted((p for p in points if not p.exact), key=lambda p: (p.angle(), abs(p.p)))
    return tuple(exact + numeric)


def binary_form_roots(D: DualForm, tol: float = ROOT_TOL, max_iter: int = MAX_ITER) -> RootSet:
    """All projective roots of a squarefree dual form.

    Exact roots first (the point at infinity, rational roots, rational
    quadratic factors), then the rest by Aberth iteration on the deflated
    polynomial, polished by Newton steps on the full one and verified by
    residual.
    """
    if D.is_zero():
        raise ValueError("the zero form has no roots")
    if not squarefree_test(D):
        raise NotSquarefreeError(f"{D} has a repeated root")
    m, g = D.dehomogenize()
    pts = []
    if m:
        pts.append(ProjectivePoint(1, 0))
    for t in upoly.rational_roots(g):
        pts.append(ProjectivePoint(t, 1))
        g, rem = upoly.poly_divmod(g, [Fraction(1), -t])
        assert not rem
    if len(g) == 3:
        quad = _quadratic_roots(g)
        if quad is not None:
            pts.extend(ProjectivePoint(t, 1) for t in quad)
            g = [g[0]]
    if len(g) > 1:
        coeffs = [complex(c) for c in g]
        zs, _, converged = kernels.aberth(coeffs, tol * 1e-4, max_iter)
        if not converged:
            raise NumericRootError(f"Aberth iteration did not converge in {max_iter} steps")
        full = [complex(c) for c in D.coeffs[m:]]
        dfull = [c * (len(full) - 1 - i) for i, c in enumerate(full[:-1])]
        for z in zs:
            for _ in range(3):
                pv = np.polyval(full, z)
                dv = np.polyval(dfull, z)
                if dv == 0 or pv == 0:
                    break
                z = z - pv / dv
            pts.append(ProjectivePoint(z, 1, exact=False))
    pts = _sort_points(pts)
    if len(pts) != D.degree:
        raise NumericRootError(f"found {len(pts)} roots for a form of degree {D.degree}")
    numeric = [p for p in pts if not p.exact]
    res = _residual(D, numeric) if numeric else 0.0
    if res > tol:
        raise NumericRootError(f"root residual {res:.3e} exceeds tolerance {tol:.1e}")
    if numeric:
        vals = [complex(p.q) / complex(p.p) if p.p != 0 else complex("inf") for p in numeric]
        for i in range(len(vals)):
            for j in range(i):
                if abs(vals[i] - vals[j]) < 1e3 * tol * max(1.0, abs(vals[i])):
                    raise NumericRootError("numeric roots collapsed onto each other")
    return RootSet(pts, res)


def _power_column(pt: ProjectivePoint, d: int):
    if pt.exact:
        return [math.comb(d, i) * Fraction(pt.p) ** (d - i) * Fraction(pt.q) ** i for i in range(d + 1)]
    p, q = complex(pt.p), complex(pt.q)
    return [math.comb(d, i) * p ** (d - i) * q**i for i in range(d + 1)]


class InconsistentSystemError(ArithmeticError):
    """The Vandermonde system has no exact solution: the roots are not apolar to the forms."""


def solve_coefficients(forms: Sequence[BinaryForm], roots: RootSet) -> tuple[list[list], float]:
    """Coefficients ``c[i][j]`` with ``f_i = sum_j c[i][j] * l_j^d``, plus the reconstruction residual."""
    d = forms[0].degree
    k = len(roots.points)
    if k > d + 1:
        raise ValueError(f"{k} points exceed d+1={d + 1}; powers would be dependent")
    if not roots.multiplicity_free:
        raise ValueError("roots must be pairwise distinct")
    cols = [_power_column(p, d) for p in roots.points]
    if roots.exact:
        A = RationalMatrix(tuple(tuple(col[i] for col in cols) for i in range(d + 1)), k)
        out = []
        for f in forms:
            sol = solve_linear(A, f.coeffs)
            if not sol.consistent:
                raise InconsistentSystemError(f"{f} is not in the span of the given powers")
            out.append(list(sol.x))
        return out, 0.0
    A = np.array([[col[i] for col in cols] for i in range(d + 1)], dtype=complex)
    out = []
    worst = 0.0
    for f in forms:
        b = np.array([float(c) for c in f.coeffs], dtype=complex)
        x, *_ = np.linalg.lstsq(A, b, rcond=None)
        worst = max(worst, _relative_deviation(A @ x, f))
        out.append([complex(v) for v in x])
    return out, worst


def _relative_deviation(values, f: BinaryForm) -> float:
    scale = max(1.0, max(abs(float(c)) for c in f.coeffs))
    return max(abs(v - float(c)) for v, c in zip(values, f.coeffs)) / scale


@dataclass(frozen=True)
class Decomposition:
    """``f_i = sum_j coefficients[i][j] * l_j^d`` with ``l_j`` from ``points[j]``."""

    degree: int
    points: tuple
    coefficients: tuple
    residual: float
    witness: DualForm | None = None

    @property
    def exact(self) -> bool:
        return all(p.exact for p in self.points)

    @property
    def k(self) -> int:
        return len(self.points)

    def linear_forms(self) -> list:
        """``LinearForm`` for exact points, complex pairs ``(p, q)`` otherwise."""
        return [p.linear_form() if p.exact else (complex(p.p), complex(p.q)) for p in self.points]

    def terms(self, i: int) -> list[tuple]:
        return list(zip(self.linear_forms(), self.coefficients[i]))


@dataclass(frozen=True)
class VerificationReport:
    deviation: float
    exact: bool
    passed: bool


def verify_decomposition(forms: Sequence[BinaryForm], dec: Decomposition, tol: float = RECON_TOL) -> VerificationReport:
    """Re-expand every power sum and compare with the input forms.

    Exact decompositions are expanded in rationals and must match exactly;
    numeric ones are expanded in floating point and compared relative to the
    largest input coefficient.
    """
    if len(forms) != len(dec.coefficients):
        raise ValueError("form count does not match coefficient rows")
    d = dec.degree
    if dec.exact:
        worst = Fraction(0)
        lfs = dec.linear_forms()
        for f, row in zip(forms, dec.coefficients):
            g = expand_power_sum(d, list(zip(lfs, row)))
            worst = max([worst] + [abs(a - b) for a, b in zip(f.coeffs, g.coeffs)])
        return VerificationReport(float(worst), True, worst == 0)
    cols = [_power_column(p, d) for p in dec.points]
    worst = 0.0
    for f, row in zip(forms, dec.coefficients):
        vals = [sum(complex(c) * col[i] for c, col in zip(row, cols)) for i in range(d + 1)]
        worst = max(worst, _relative_deviation(vals, f))
    return VerificationReport(worst, False, worst < tol)


def decompose_with_witness(
    forms: Sequence[BinaryForm], witness: DualForm, tol: float = ROOT_TOL, recon_tol: float = RECON_TOL
) -> Decomposition:
    """Decompose along the roots of a given squarefree apolar form."""
    roots = binary_form_roots(witness, tol)
    coeffs, residual = solve_coefficients(forms, roots)
    dec = Decomposition(
        forms[0].degree,
        roots.points,
        tuple(tuple(r) for r in coeffs),
        residual,
        witness,
    )
    rep = verify_decomposition(forms, dec, recon_tol)
    if not rep.passed:
        raise NumericRootError(f"reconstruction deviation {rep.deviation:.3e} exceeds {recon_tol:.1e}")
    return Decomposition(dec.degree, dec.points, dec.coefficients, rep.deviation, witness)


def decompose(
    forms: Sequence[BinaryForm],
    k: int,
    seed: int = 0,
    tol: float = ROOT_TOL,
    recon_tol: float = RECON_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Decomposition:
    """Simultaneous decomposition of ``forms`` with exactly ``k`` linear forms."""
    check_independent(forms)
    res = vsps(forms, k, seed, budget, check=False)
    if not res.vssp_nonempty:
        raise EmptyDecompositionError(
            f"no squarefree form in the degree-{k} apolar space (projective dim {res.projective_dim})"
        )
    return decompose_with_witness(forms, res.squarefree_witness, tol, recon_tol)
