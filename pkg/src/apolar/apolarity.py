"""Orthogonal ideals, inverse systems and simultaneous apolar spaces.

Everything is computed one graded piece at a time: ``(f^perp)_k`` is the
kernel of the catalecticant ``T_k -> S_{d-k}``, and the degree-``k`` piece
of an intersection of ideals is the kernel of the stacked catalecticants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .forms import BinaryForm, DualForm, forms_gcd, squarefree_test
from .linalg import RationalMatrix, SubspaceBasis, kernel, rank

DEFAULT_BUDGET = 256
DEFAULT_BOUND = 10


class DependentFormsError(ValueError):
    """Input forms are linearly dependent.

    A dependent system decomposes exactly like any maximal independent
    subset of it, so callers should pass that subset instead.
    """


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of ``S_degree`` (side ``"S"``) or ``T_degree`` (side ``"T"``)."""

    side: str
    degree: int
    basis: SubspaceBasis

    def __post_init__(self):
        if self.side not in ("S", "T"):
            raise ValueError("side must be 'S' or 'T'")
        if self.basis.ambient_dim != self.degree + 1:
            raise ValueError("basis ambient dimension must be degree + 1")

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def projective_dim(self) -> int:
        """Dimension of the projectivization; -1 for the zero space."""
        return self.basis.dim - 1

    def forms(self) -> list:
        cls = DualForm if self.side == "T" else BinaryForm
        return [cls(v) for v in self.basis.vectors]

    def contains(self, form) -> bool:
        if form.degree != self.degree:
            return False
        return self.basis.contains(form.coeffs)


def _fact(n: int) -> list[int]:
    return [math.factorial(i) for i in range(n + 1)]


def catalecticant_matrix(f: BinaryForm, k: int) -> RationalMatrix:
    """Matrix of ``D -> D o f`` from ``T_k`` to ``S_{d-k}`` in monomial bases.

    Rows index ``x0^(d-k-m) x1^m``, columns index ``y0^(k-j) y1^j``.
    """
    d = f.degree
    if not 0 <= k <= d:
        raise ValueError(f"k={k} outside 0..{d}")
    fact = _fact(d)
    a = f.coeffs
    rows = []
    for m in range(d - k + 1):
        scale = fact[d - k - m] * fact[m]
        rows.append(tuple(a[m + j] * fact[d - m - j] * fact[m + j] / scale for j in range(k + 1)))
    return RationalMatrix(tuple(rows), k + 1)


def _action_matrix(D: DualForm, d: int) -> RationalMatrix:
    """Matrix of ``f -> D o f`` from ``S_d`` to ``S_{d-k}``."""
    k = D.degree
    fact = _fact(d)
    rows = []
    for m in range(d - k + 1):
        row = [Fraction(0)] * (d + 1)
        scale = fact[d - k - m] * fact[m]
        for j, b in enumerate(D.coeffs):
            i = m + j
            row[i] = b * fact[d - i] * fact[i] / scale
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows), d + 1)


def orthogonal_component(f: BinaryForm, k: int) -> GradedSubspace:
    """``(f^perp)_k``. Past the socle degree every dual form kills ``f``."""
    if f.is_zero():
        raise ValueError("the zero form has no orthogonal ideal of interest")
    if k < 0:
        raise ValueError("negative degree")
    if k > f.degree:
        return GradedSubspace("T", k, SubspaceBasis.full(k + 1))
    return GradedSubspace("T", k, kernel(catalecticant_matrix(f, k)))


def inverse_system_component(D: DualForm, d: int) -> GradedSubspace:
    """``(D^{-1})_d``: the forms of degree ``d`` killed by ``D``. Its dimension is ``deg D``."""
    if D.is_zero():
        raise ValueError("the zero dual form kills everything")
    if D.degree > d:
        raise ValueError(f"dual degree {D.degree} exceeds d={d}")
    return GradedSubspace("S", d, kernel(_action_matrix(D, d)))


def check_independent(forms: Sequence[BinaryForm]) -> int:
    """Validate a system of forms; return the common degree."""
    if not forms:
        raise ValueError("need at least one form")
    d = forms[0].degree
    for f in forms:
        if not isinstance(f, BinaryForm):
            raise TypeError("forms must be BinaryForm instances")
        if f.degree != d:
            raise ValueError("forms must share one degree")
    r = rank(RationalMatrix(tuple(f.coeffs for f in forms), d + 1))
    if r < len(forms):
        raise DependentFormsError(
            f"the {len(forms)} forms span only a {r}-dimensional space; "
            "the problem reduces to an independent subset of them"
        )
    return d


def simultaneous_orthogonal_component(forms: Sequence[BinaryForm], k: int) -> GradedSubspace:
    """``(f_1^perp ∩ ... ∩ f_r^perp)_k`` for any forms, dependent or not."""
    d = forms[0].degree
    if k > d:
        return GradedSubspace("T", k, SubspaceBasis.full(k + 1))
    rows = []
    for f in forms:
        if f.is_zero():
            continue
        rows.extend(catalecticant_matrix(f, k).rows)
    return GradedSubspace("T", k, kernel(RationalMatrix(tuple(rows), k + 1)))


@dataclass(frozen=True)
class WitnessSearch:
    """Outcome of a squarefree-witness search.

    ``method`` is one of ``"basis"``, ``"sweep"``, ``"random"`` (witness
    found that way), ``"gcd"`` (none exists: every element shares a
    repeated factor), ``"sweep-exhausted"`` (none exists on the pencil) or
    ``"budget"`` (none found, existence not settled).
    """

    witness: DualForm | None
    method: str
    proven: bool
    trials: int = 0


def _pencil_points(count: int):
    yield (1, 0)
    yield (0, 1)
    t = 1
    n = 2
    while n < count:
        yield (1, t)
        n += 1
        if n < count:
            yield (1, -t)
            n += 1
        t += 1


def search_squarefree_witness(
    space: GradedSubspace,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    bound: int = DEFAULT_BOUND,
) -> WitnessSearch:
    """Look for a dual form with distinct roots inside ``space``.

    In characteristic 0 the general member of a linear system of binary
    forms is its fixed part (the gcd of a basis) times a member with
    distinct roots none of which are base points. So a squarefree element
    exists iff the gcd of the basis is squarefree, and that test settles
    the negative case in every dimension. Positive cases still need an
    explicit witness: basis vectors first, then a full sweep of ``2k-1``
    members for a pencil (more than the degree of the discriminant on it),
    then seeded random integer combinations whose coefficient bound doubles
    after every 16 misses.
    """
    if space.side != "T":
        raise ValueError("witnesses live in the dual ring")
    if space.dim == 0:
        raise ValueError("the zero space has no witness")
    gens = space.forms()
    k = space.degree
    if not squarefree_test(forms_gcd(gens)):
        return WitnessSearch(None, "gcd", True)
    trials = 0
    for g in gens:
        trials += 1
        if squarefree_test(g):
            return WitnessSearch(g.normalized(), "basis", True, trials)
    if space.dim == 2:
        for s, t in _pencil_points(2 * k - 1):
            if t == 0 or s == 0:
                continue
            trials += 1
            cand = gens[0].scale(s) + gens[1].scale(t)
            if squarefree_test(cand):
                return WitnessSearch(cand.normalized(), "sweep", True, trials)
        # unreachable when the gcd test passed, kept as a guard
        return WitnessSearch(None, "sweep-exhausted", True, trials)
    rng = np.random.default_rng([seed, k, space.dim])
    b = bound
    for i in range(budget):
        if i and i % 16 == 0:
            b *= 2
        coeffs = rng.integers(-b, b + 1, size=len(gens))
        if not coeffs.any():
            continue
        trials += 1
        cand = DualForm.zero(k)
        for c, g in zip(coeffs, gens):
            if c:
                cand = cand + g.scale(int(c))
        if squarefree_test(cand):
            return WitnessSearch(cand.normalized(), "random", True, trials)
    return WitnessSearch(None, "budget", False, trials)


def find_squarefree_witness(
    space: GradedSubspace, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> DualForm | None:
    return search_squarefree_witness(space, seed, budget).witness


@dataclass(frozen=True)
class VspsResult:
    """Degree-``k`` piece of the simultaneous orthogonal ideal.

    Its projectivization is the space of simultaneous apolar schemes of
    length ``k``; when ``vssp_nonempty`` the space of simultaneous sums of
    powers is the same projective space.
    """

    k: int
    space: GradedSubspace
    squarefree_witness: DualForm | None = None
    witness_method: str | None = None
    forms: tuple = field(default=(), repr=False)

    @property
    def projective_dim(self) -> int:
        return self.space.projective_dim

    @property
    def vssp_nonempty(self) -> bool:
        return self.squarefree_witness is not None

    @property
    def vssp_dim(self) -> int | None:
        """Projective dimension of the sums-of-powers space, ``None`` if empty."""
        return self.projective_dim if self.vssp_nonempty else None


def vsps(
    forms: Sequence[BinaryForm],
    k: int,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    check: bool = True,
) -> VspsResult:
    """Simultaneous apolar space of length ``k``, with a squarefree witness if one exists.

    ``k`` may be ``d + 1``, where the space is all of ``T_{d+1}``.
    """
    d = check_independent(forms) if check else forms[0].degree
    if not 1 <= k <= d + 1:
        raise ValueError(f"k={k} outside 1..{d + 1}")
    space = simultaneous_orthogonal_component(forms, k)
    if space.dim == 0:
        return VspsResult(k, space, None, None, tuple(forms))
    found = search_squarefree_witness(space, seed, budget)
    return VspsResult(k, space, found.witness, found.method, tuple(forms))


@dataclass(frozen=True)
class KminResult:
    k: int
    witness: DualForm
    # True when nothing up to degree d worked and d+1 distinct points were used
    extended: bool = False
    scanned: tuple = ()


def compute_kmin(forms: Sequence[BinaryForm], seed: int = 0, budget: int = DEFAULT_BUDGET) -> KminResult:
    """Smallest ``k`` with a squarefree element of ``(∩ f_i^perp)_k``, scanning upward from 1."""
    d = check_independent(forms)
    scanned = []
    for k in range(1, d + 2):
        res = vsps(forms, k, seed, budget, check=False)
        scanned.append(res)
        if res.vssp_nonempty:
            return KminResult(k, res.squarefree_witness, k == d + 1, tuple(scanned))
    raise RuntimeError("no squarefree witness up to degree d+1; search budget too small")


def kmin_formula(d: int, r: int) -> int:
    """Generic number of linear forms needed for ``r`` forms of degree ``d``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 1 <= r <= d + 1:
        raise ValueError(f"r={r} outside 1..{d + 1}")
    return (r * (d + 1) - 1) // (r + 1) + 1


def epsilon(d: int, r: int) -> int:
    return r * (d + 1) % (r + 1)


def vssp_dim_formula(d: int, r: int, k: int) -> int | None:
    """Generic projective dimension of the sums-of-powers space; ``None`` means empty."""
    kmin = kmin_formula(d, r)
    if k < kmin:
        return None
    dim = k * (r + 1) - r * (d + 1)
    if k == kmin:
        eps = epsilon(d, r)
        assert dim == (r + 1 - eps if eps else 0), (d, r, k)
    return dim
