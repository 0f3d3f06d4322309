"""Multisecant spaces of rational curves obtained by projecting the rational normal curve.

A curve ``C`` in ``P^n`` of degree ``d > n`` is the image of the rational
normal curve ``C_d`` in ``P^d = P S_d`` under projection from a center
spanned by ``r = d - n`` forms of degree ``d``. In the extremal case
``b - a = d - n + 1`` the ``b``-secant ``a``-planes of ``C`` are the
projectivized degree-``b`` piece of the simultaneous orthogonal ideal of
the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .apolarity import (
    DEFAULT_BUDGET,
    VspsResult,
    check_independent,
    kmin_formula,
    vssp_dim_formula,
    vsps,
)
from .forms import BinaryForm, forms_gcd
from .linalg import RationalMatrix, kernel

_MULT_NAMES = {2: "double", 3: "triple", 4: "quadruple", 5: "quintuple", 6: "sextuple"}


class CenterMeetsCurveError(ValueError):
    """The projection center contains a point of the rational normal curve."""


@dataclass(frozen=True)
class CurveSpec:
    d: int
    n: int
    center_forms: tuple

    @property
    def r(self) -> int:
        return self.d - self.n


def pure_powers_in_span(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Gcd of the binary forms cutting ``C_d`` against the span of ``forms``.

    ``(a*x0 + b*x1)^d`` lies in the span iff ``w . v(a, b) = 0`` for every
    linear equation ``w`` of the span, where ``v(a, b)_i = C(d, i) a^(d-i) b^i``.
    Each equation is a binary form in ``(a, b)``; they have a common root
    over the algebraic closure iff the returned gcd is non-constant, and its
    roots are exactly the offending linear forms.
    """
    d = forms[0].degree
    eqs = kernel(RationalMatrix(tuple(f.coeffs for f in forms), d + 1))
    if eqs.dim == 0:
        # the span is all of S_d
        return BinaryForm((0, 1))
    polys = [BinaryForm(tuple(w[i] * math.comb(d, i) for i in range(d + 1))) for w in eqs.vectors]
    return forms_gcd(polys)


def make_curve(d: int, n: int, center_forms: Sequence[BinaryForm]) -> CurveSpec:
    if not 1 <= n < d:
        raise ValueError(f"need 1 <= n < d, got n={n}, d={d}")
    forms = tuple(center_forms)
    if len(forms) != d - n:
        raise ValueError(f"a curve in P^{n} of degree {d} needs {d - n} center forms, got {len(forms)}")
    if check_independent(forms) != d:
        raise ValueError(f"center forms must have degree {d}")
    g = pure_powers_in_span(forms)
    if g.degree > 0:
        raise CenterMeetsCurveError(
            f"the center contains d-th powers of the roots of {g}; projection is undefined on C_{d}"
        )
    return CurveSpec(d, n, forms)


def emptiness_bound_check(d: int, n: int, a: int, b: int) -> bool:
    """True when ``b - a > d - n + 1``, which forces every such secant space to be empty."""
    if not 1 <= n < d:
        raise ValueError(f"need d > n >= 1, got d={d}, n={n}")
    return b - a > d - n + 1


def describe(a: int, b: int, dim: int | None, smooth: bool) -> str:
    if dim is None or dim < 0 or not smooth:
        if a == 0:
            return f"no {_MULT_NAMES.get(b, f'{b}-uple')} points"
        return f"no {b}-secant {_plane(a)}"
    if a == 0:
        kind = _MULT_NAMES.get(b, f"{b}-uple")
        if dim == 0:
            return f"a unique {kind} point"
        return f"a P^{dim} of {kind} points"
    if dim == 0:
        return f"a unique {b}-secant {_plane(a)}"
    return f"a P^{dim} of {b}-secant {_plane(a)}s"


def _plane(a: int) -> str:
    return "line" if a == 1 else f"P^{a}"


@dataclass(frozen=True)
class SecantReport:
    a: int
    b: int
    projective_dim: int
    smooth_part_nonempty: bool
    witness: object = None
    note: str = ""
    backing: VspsResult | None = field(default=None, repr=False)


def secant_space(curve: CurveSpec, a: int, b: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> SecantReport:
    """``b``-secant ``a``-planes of the curve in the extremal case ``b - a = d - n + 1``."""
    d, n = curve.d, curve.n
    if emptiness_bound_check(d, n, a, b):
        raise ValueError(f"b - a = {b - a} > d - n + 1 = {d - n + 1}: the space is empty for every curve")
    if b - a != d - n + 1:
        raise ValueError(f"only b - a = d - n + 1 = {d - n + 1} is computable from the apolar ideal")
    if not 0 <= a <= n - 1:
        raise ValueError(f"a must lie in 0..{n - 1}")
    res = vsps(curve.center_forms, b, seed, budget, check=False)
    smooth = res.vssp_nonempty
    dim = res.projective_dim
    return SecantReport(a, b, dim, smooth, res.squarefree_witness, describe(a, b, dim, smooth), res)


@dataclass(frozen=True)
class TableRow:
    a: int
    b: int
    dim: int | None  # None: predicted empty

    def label(self) -> str:
        if self.dim is None:
            return "empty"
        if self.dim == 0:
            return "point"
        return f"P^{self.dim}"


def generic_secant_table(d: int, n: int) -> list[TableRow]:
    """Predicted extremal secant spaces of a generic curve, one row per ``a``."""
    if not 1 <= n < d:
        raise ValueError(f"need d > n >= 1, got d={d}, n={n}")
    r = d - n
    kmin = kmin_formula(d, r)
    rows = []
    for a in range(n):
        b = a + r + 1
        dim = b * (r + 1) - r * (d + 1) if b >= kmin else None
        assert dim == vssp_dim_formula(d, r, b)
        rows.append(TableRow(a, b, dim))
    return rows


@dataclass(frozen=True)
class GenericityReport:
    generic_consistent: bool
    rows: tuple  # (TableRow, SecantReport) pairs
    mismatches: tuple

    @property
    def verdict(self) -> str:
        return "consistent with generic" if self.generic_consistent else "non-generic (certified)"


def genericity_probe(curve: CurveSpec, seed: int = 0, budget: int = DEFAULT_BUDGET) -> GenericityReport:
    """Compare the computed secant spaces with the generic prediction.

    A mismatch certifies that the curve is not generic; agreement proves
    nothing either way.
    """
    rows = []
    bad = []
    for pred in generic_secant_table(curve.d, curve.n):
        rep = secant_space(curve, pred.a, pred.b, seed, budget)
        if pred.dim is None:
            ok = rep.projective_dim == -1 and not rep.smooth_part_nonempty
        else:
            ok = rep.projective_dim == pred.dim and rep.smooth_part_nonempty
        rows.append((pred, rep))
        if not ok:
            bad.append((pred, rep))
    return GenericityReport(not bad, tuple(rows), tuple(bad))
