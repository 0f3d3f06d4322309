"""Exact rational linear algebra.

The working path clears denominators row by row and runs fraction-free
Gauss-Jordan elimination on integers (``apolar.kernels``). ``gauss_rref`` is
an independently written textbook elimination over ``Fraction`` kept as an
oracle for the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels


@dataclass(frozen=True)
class RationalMatrix:
    """Dense ``nrows x ncols`` matrix of exact rationals."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {self.ncols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows, ncols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        return cls(tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column mismatch in stack")
        return RationalMatrix(self.rows + other.rows, self.ncols)

    def transpose(self) -> "RationalMatrix":
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return RationalMatrix(cols, self.nrows)

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows]


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            x = Fraction(x)
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def rref(rows, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    m, pivots, det = kernels.ff_gauss_jordan(_integer_rows(rows), ncols)
    det = Fraction(det)
    return [[Fraction(x) / det for x in m[i]] for i in range(len(pivots))], pivots


def gauss_rref(rows, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Oracle: Gauss-Jordan with ``Fraction`` pivots, scaled to 1 first."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    top = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(top, len(a)):
            if a[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[top], a[pivot_row] = a[pivot_row], a[top]
        inv = 1 / a[top][col]
        a[top] = [x * inv for x in a[top]]
        for i in range(len(a)):
            if i != top and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[top])]
        pivots.append(col)
        top += 1
    return a[:top], pivots


def _kernel_from_rref(r, pivots, ncols) -> list[list[Fraction]]:
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(r, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class SubspaceBasis:
    """Linear subspace of ``K^ambient_dim`` held in reduced row echelon form.

    Two instances are equal exactly when they span the same subspace.
    """

    ambient_dim: int
    vectors: tuple

    def __post_init__(self):
        vecs = [list(v) for v in self.vectors]
        for v in vecs:
            if len(v) != self.ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        r, _ = rref(vecs, self.ambient_dim) if vecs else ([], [])
        if len(r) != len(vecs):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in r))

    @classmethod
    def _trusted(cls, ambient_dim: int, rows) -> "SubspaceBasis":
        # rows already in reduced row echelon form
        self = object.__new__(cls)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in rows))
        return self

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "SubspaceBasis":
        """Subspace spanned by possibly dependent vectors."""
        vecs = [list(v) for v in vectors]
        r, _ = rref(vecs, ambient_dim) if vecs else ([], [])
        return cls._trusted(ambient_dim, r)

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls._trusted(ambient_dim, [[Fraction(int(i == j)) for j in range(ambient_dim)] for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        return rank(RationalMatrix(self.vectors + (tuple(v),), self.ambient_dim)) == self.dim

    def annihilator(self) -> RationalMatrix:
        """Rows spanning ``{w : w . v = 0 for all v in self}``."""
        if not self.vectors:
            return RationalMatrix(SubspaceBasis.full(self.ambient_dim).vectors, self.ambient_dim)
        return RationalMatrix(kernel(RationalMatrix(self.vectors, self.ambient_dim)).vectors, self.ambient_dim)


def kernel(M: RationalMatrix) -> SubspaceBasis:
    """Reduced-echelon basis of ``{v : M v = 0}``."""
    if not M.rows:
        return SubspaceBasis.full(M.ncols)
    r, pivots = rref(M.rows, M.ncols)
    return SubspaceBasis.span(_kernel_from_rref(r, pivots, M.ncols), M.ncols)


def rank(M: RationalMatrix) -> int:
    if not M.rows:
        return 0
    _, pivots, _ = kernels.ff_gauss_jordan(_integer_rows(M.rows), M.ncols)
    return len(pivots)


def gauss_kernel(M: RationalMatrix) -> tuple:
    """Oracle kernel, as reduced-echelon row tuples, from :func:`gauss_rref` only."""
    if not M.rows:
        basis = [[Fraction(int(i == j)) for j in range(M.ncols)] for i in range(M.ncols)]
    else:
        r, pivots = gauss_rref(M.rows, M.ncols)
        basis = _kernel_from_rref(r, pivots, M.ncols)
    r2, _ = gauss_rref(basis, M.ncols) if basis else ([], [])
    return tuple(tuple(v) for v in r2)


def gauss_rank(M: RationalMatrix) -> int:
    if not M.rows:
        return 0
    return len(gauss_rref(M.rows, M.ncols)[1])


def intersect_subspaces(spaces: Sequence[SubspaceBasis]) -> SubspaceBasis:
    """Intersection as the kernel of the stacked annihilators."""
    if not spaces:
        raise ValueError("need at least one subspace")
    n = spaces[0].ambient_dim
    for s in spaces:
        if s.ambient_dim != n:
            raise ValueError(f"ambient dimension mismatch: {s.ambient_dim} vs {n}")
    rows = []
    for s in spaces:
        rows.extend(s.annihilator().rows)
    return kernel(RationalMatrix(tuple(rows), n))


@dataclass(frozen=True)
class LinearSolution:
    """Result of :func:`solve_linear`; ``x`` is ``None`` when inconsistent."""

    x: tuple | None
    nullity: int

    @property
    def consistent(self) -> bool:
        return self.x is not None


def solve_linear(A: RationalMatrix, b: Sequence) -> LinearSolution:
    """Exact solution of ``A x = b``.

    Free variables are set to zero, which picks the solution supported on
    the lowest-index pivot columns. Inconsistency is reported, not raised.
    """
    if len(b) != A.nrows:
        raise ValueError("right-hand side length mismatch")
    n = A.ncols
    aug = [list(r) + [Fraction(x)] for r, x in zip(A.rows, b)]
    if not aug:
        return LinearSolution(tuple(Fraction(0) for _ in range(n)), n)
    r, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return LinearSolution(None, n - (len(pivots) - 1))
    x = [Fraction(0)] * n
    for row, pc in zip(r, pivots):
        x[pc] = row[n]
    return LinearSolution(tuple(x), n - len(pivots))
