"""Random sampling and Monte Carlo validation of the generic k_min and dimension formulas."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

import numpy as np

from .apolarity import (
    DEFAULT_BUDGET,
    compute_kmin,
    epsilon,
    kmin_formula,
    simultaneous_orthogonal_component,
    vsps,
    vssp_dim_formula,
)
from .forms import BinaryForm, LinearForm, expand_power_sum, forms_gcd
from .linalg import RationalMatrix, rank


# witness-search outcomes that prove no squarefree element exists
PROVEN_EMPTY = ("gcd", "sweep-exhausted")


class SamplingError(RuntimeError):
    pass


def _rng(seed: int, d: int, r: int, trial: int, attempt: int = 0) -> np.random.Generator:
    key = [seed, d, r, trial] + ([attempt] if attempt else [])
    return np.random.default_rng(np.random.SeedSequence(key))


def sample_forms(
    d: int, r: int, coeff_bound: int = 10, seed: int = 0, trial: int = 0, attempt: int = 0, retries: int = 100
) -> list[BinaryForm]:
    """``r`` independent forms of degree ``d`` with integer coefficients uniform in ``[-B, B]``.

    The stream depends only on ``(seed, d, r, trial, attempt)``.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 1 <= r <= d + 1:
        raise ValueError(f"r={r} outside 1..{d + 1}")
    rng = _rng(seed, d, r, trial, attempt)
    for _ in range(retries):
        m = rng.integers(-coeff_bound, coeff_bound + 1, size=(r, d + 1))
        if rank(RationalMatrix(tuple(tuple(int(x) for x in row) for row in m), d + 1)) == r:
            return [BinaryForm(tuple(int(x) for x in row)) for row in m]
    raise SamplingError(f"no independent sample in {retries} draws with bound {coeff_bound}")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 50
    d_range: tuple = (1, 12)
    r_range: tuple = (1, 4)
    coeff_bound: int = 10
    budget: int = DEFAULT_BUDGET
    resample_nongeneric: bool = False
    max_resamples: int = 3
    jobs: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.coeff_bound < 1:
            raise ValueError("coefficient bound must be positive")
        if self.d_range[0] < 1 or self.d_range[0] > self.d_range[1]:
            raise ValueError(f"bad d range {self.d_range}")
        if self.r_range[0] < 1 or self.r_range[0] > self.r_range[1]:
            raise ValueError(f"bad r range {self.r_range}")

    def cells(self) -> list[tuple[int, int]]:
        """Grid cells ``(d, r)`` with ``r <= d``."""
        return [
            (d, r)
            for r in range(self.r_range[0], self.r_range[1] + 1)
            for d in range(max(r, self.d_range[0]), self.d_range[1] + 1)
        ]


@dataclass
class TrialReport:
    d: int
    r: int
    seed: int
    trial: int
    coeff_bound: int
    kmin_computed: int
    kmin_formula: int
    below_dims: list  # VSPS projective dims for k < formula k_min
    dim_at_kmin: int | None  # computed VSSP dims, None = empty
    dim_at_kmin1: int | None
    formula_dim_at_kmin: int
    formula_dim_at_kmin1: int
    epsilon: int
    kmin_match: bool
    below_empty: bool
    dims_match: bool
    epsilon_match: bool
    nongeneric: bool = False
    certificate: str = ""
    attempt: int = 0
    forms: list = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.kmin_match and self.below_empty and self.dims_match and self.epsilon_match

    @property
    def unexplained(self) -> bool:
        return not self.agrees and not self.nongeneric


def run_trial(d: int, r: int, seed: int, trial: int, coeff_bound: int = 10, budget: int = DEFAULT_BUDGET, attempt: int = 0) -> TrialReport:
    forms = sample_forms(d, r, coeff_bound, seed, trial, attempt)
    kf = kmin_formula(d, r)
    km = compute_kmin(forms, seed, budget)
    below = [res.projective_dim for res in km.scanned if res.k < kf]
    # the scan stops at the computed k_min; finish the range below the formula
    for k in range(km.k + 1, kf):
        below.append(vsps(forms, k, seed, budget, check=False).projective_dim)
    at = vsps(forms, kf, seed, budget, check=False)
    at1 = vsps(forms, kf + 1, seed, budget, check=False)
    f0 = vssp_dim_formula(d, r, kf)
    f1 = vssp_dim_formula(d, r, kf + 1)
    eps = epsilon(d, r)
    rep = TrialReport(
        d=d,
        r=r,
        seed=seed,
        trial=trial,
        coeff_bound=coeff_bound,
        kmin_computed=km.k,
        kmin_formula=kf,
        below_dims=below,
        dim_at_kmin=at.vssp_dim,
        dim_at_kmin1=at1.vssp_dim,
        formula_dim_at_kmin=f0,
        formula_dim_at_kmin1=f1,
        epsilon=eps,
        kmin_match=km.k == kf,
        below_empty=all(x == -1 for x in below),
        dims_match=at.vssp_dim == f0 and at1.vssp_dim == f1,
        epsilon_match=at.vssp_dim == (r + 1 - eps if eps else 0),
        attempt=attempt,
        forms=[[str(c) for c in f.coeffs] for f in forms],
    )
    certs = []
    if km.k < kf:
        certs.append(f"k_min={km.k} witnessed by {km.witness}")
    if not rep.below_empty:
        certs.append(f"apolar space nonempty below k_min: dims {below}")
    for k, res, f in ((kf, at, f0), (kf + 1, at1, f1)):
        if res.projective_dim > f:
            certs.append(f"fiber at k={k} has dim {res.projective_dim} > {f}")
        if res.projective_dim >= 0 and res.witness_method in PROVEN_EMPTY:
            gcd = forms_gcd(res.space.forms())
            certs.append(f"every degree-{k} apolar form is divisible by the non-squarefree {gcd}")
    if certs and not rep.agrees:
        rep.nongeneric = True
        rep.certificate = "; ".join(certs)
    return rep


def _run_cell_trial(args) -> TrialReport:
    d, r, trial, cfg = args
    rep = run_trial(d, r, cfg.seed, trial, cfg.coeff_bound, cfg.budget)
    attempt = 0
    while rep.nongeneric and cfg.resample_nongeneric and attempt < cfg.max_resamples:
        attempt += 1
        rep = run_trial(d, r, cfg.seed, trial, cfg.coeff_bound, cfg.budget, attempt)
    return rep


@dataclass
class TheoremSummary:
    trials: int
    agreements: int
    nongeneric: int
    unexplained: int
    reports: list

    @property
    def agreement_rate(self) -> float:
        return self.agreements / self.trials if self.trials else 1.0

    @property
    def passed(self) -> bool:
        return self.unexplained == 0

    def worst(self) -> list:
        return [r for r in self.reports if not r.agrees][:10]

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "agreements": self.agreements,
            "agreement_rate": self.agreement_rate,
            "nongeneric": self.nongeneric,
            "unexplained": self.unexplained,
            "passed": self.passed,
            "disagreements": [asdict(r) for r in self.worst()],
        }


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def validate_kmin_theorem(config: RunConfig) -> TheoremSummary:
    """Compare the apolarity engine with the closed forms over the configured grid."""
    work = [(d, r, t, config) for d, r in config.cells() for t in range(config.trials)]
    reports = _map(_run_cell_trial, work, config.jobs)
    agree = sum(r.agrees for r in reports)
    ng = sum(r.nongeneric for r in reports)
    unexplained = sum(r.unexplained for r in reports)
    return TheoremSummary(len(reports), agree, ng, unexplained, reports)


def adversarial_families(d: int, r: int) -> Iterable[tuple[str, list[BinaryForm]]]:
    """Special systems for which the intersection is as large or as degenerate as possible."""
    for s in range(0, d + 2 - r):
        yield f"monomials x1^{s}..x1^{s + r - 1}", [BinaryForm.monomial(d, i) for i in range(s, s + r)]
    if r <= (d + 2) // 2:
        yield "spread monomials", [BinaryForm.monomial(d, 2 * i) for i in range(r)]
    lines = [LinearForm(1, j) for j in range(r)]
    yield "pure powers", [lf.power(d) for lf in lines]
    yield "one repeated power", [LinearForm(1, 1).power(d)] * r
    x0, x1 = BinaryForm((1, 0)), BinaryForm((0, 1))
    mixed = []
    for i in range(r):
        f = BinaryForm((1,))
        for _ in range(d - i):
            f = f * x0
        for _ in range(i):
            f = f * (x0 + x1)
        mixed.append(f)
    yield "repeated-root products", mixed
    # all forms killed by one dual form of degree k_min: they share an apolar factor
    k = kmin_formula(d, r)
    if k <= d:
        shared = [LinearForm(1, j) for j in range(k)]
        yield "shared apolar factor", [
            expand_power_sum(d, [(lf, (i + 1) ** j) for j, lf in enumerate(shared)]) for i in range(r)
        ]


@dataclass
class GrassmannSummary:
    cases: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"cases": self.cases, "failures": self.failures, "passed": self.passed}


def grassmann_lower_bound(d: int, r: int, k: int) -> int:
    return k * (r + 1) - r * (d + 1) + 1


def validate_grassmann_bound(config: RunConfig) -> GrassmannSummary:
    """The degree-``k_min`` piece of the intersection is nonzero for every system tried."""
    cases = 0
    failures = []
    for d, r in config.cells():
        k = kmin_formula(d, r)
        suites = list(adversarial_families(d, r))
        for t in range(config.trials):
            suites.append((f"random trial {t}", sample_forms(d, r, config.coeff_bound, config.seed, t)))
        for name, forms in suites:
            cases += 1
            dim = simultaneous_orthogonal_component(forms, k).dim
            if dim == 0 or dim < grassmann_lower_bound(d, r, k):
                failures.append({"d": d, "r": r, "k": k, "family": name, "dim": dim})
    return GrassmannSummary(cases, failures)
