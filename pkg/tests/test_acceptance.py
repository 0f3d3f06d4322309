"""Acceptance criteria, one PASS/FAIL line each.

Runs under pytest (lines are printed past output capture) or directly::

    python3 tests/test_acceptance.py
"""

import random
import sys
from fractions import Fraction

import pytest

from apolar import (
    BinaryForm,
    DualForm,
    LinearForm,
    catalecticant_matrix,
    compute_kmin,
    expand_power_sum,
    genericity_probe,
    inverse_system_component,
    kmin_formula,
    make_curve,
    orthogonal_component,
    squarefree_test,
    vsps,
)
from apolar.cli import run_cli
from apolar.decompose import decompose, decompose_with_witness, verify_decomposition
from apolar.harness import RunConfig, sample_forms, validate_grassmann_bound, validate_kmin_theorem
from apolar.linalg import RationalMatrix, SubspaceBasis, gauss_kernel, gauss_rank, kernel, rank

NUMERIC_RECON_TOL = 1e-8

F1 = expand_power_sum(5, [(LinearForm(1, 0), -2), (LinearForm(0, 1), 2), (LinearForm(1, -1), 1)])
F2 = expand_power_sum(5, [(LinearForm(1, 0), -6), (LinearForm(0, 1), 3), (LinearForm(1, -1), 2)])


def report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def criterion_quintic_example():
    dims = [vsps([F1, F2], k).space.dim for k in (3, 4, 5)]
    gen = vsps([F1, F2], 3).space.forms()
    dec = decompose([F1, F2], 3)
    columns = {lf: (row1, row2) for lf, row1, row2 in zip(dec.linear_forms(), *dec.coefficients)}
    want = {LinearForm(1, 0): (-2, -6), LinearForm(0, 1): (2, 3), LinearForm(1, -1): (1, 2)}
    ok = (
        dims == [1, 2, 4]
        and len(gen) == 1
        and squarefree_test(gen[0])
        and dec.exact
        and dec.residual == 0
        and columns == want
    )
    return ok, f"dims I_3,I_4,I_5 = {dims}, generator {gen[0]}, columns {columns == want}"


def criterion_sylvester(seeds: int = 50):
    fails, flagged, total = [], [], 0
    for d in range(2, 11):
        for seed in range(seeds):
            (f,) = sample_forms(d, 1, seed=seed)
            total += 1
            km = compute_kmin([f], seed)
            res = vsps([f], km.k, seed)
            expected_dim = 1 if d % 2 == 0 else 0
            if km.k == d // 2 + 1 and res.vssp_dim == expected_dim:
                continue
            if km.k < d // 2 + 1 or (res.vssp_dim or 0) > expected_dim:
                flagged.append(f"{f} has k_min {km.k} via {km.witness}")
            else:
                fails.append((d, seed, km.k, res.vssp_dim))
    agree = total - len(flagged) - len(fails)
    return not fails, f"{agree}/{total} agree, {len(fails)} failures, non-generic flagged: {flagged or 'none'}"


def criterion_theorem_grid(trials: int = 50):
    s = validate_kmin_theorem(RunConfig(trials=trials, d_range=(1, 12), r_range=(1, 4)))
    return s.passed, (
        f"{s.agreements}/{s.trials} agree ({100 * s.agreement_rate:.2f}%), "
        f"{s.nongeneric} non-generic with certificate, {s.unexplained} unexplained"
    )


def criterion_grassmann(trials: int = 50):
    s = validate_grassmann_bound(RunConfig(trials=trials, d_range=(1, 12), r_range=(1, 4)))
    return s.passed, f"{s.cases - len(s.failures)}/{s.cases} intersections nonzero at k = kmin_formula"


def _rand(rng, n, bound=9):
    while True:
        v = tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(n))
        if any(v):
            return v


def criterion_properties():
    rng = random.Random(20240611)
    bad = {"dim": 0, "inj": 0, "member": 0, "gorenstein": 0}
    for _ in range(200):
        k = rng.randint(1, 6)
        d = rng.randint(k, 10)
        D = DualForm(_rand(rng, k + 1))
        bad["dim"] += inverse_system_component(D, d).dim != k
    for i in range(200):
        k = rng.randint(1, 5)
        d = rng.randint(k, 9)
        D = DualForm(_rand(rng, k + 1))
        # half the pairs are proportional, so both directions get exercised
        G = D.scale(Fraction(rng.randint(1, 9), rng.choice((-2, -1, 1, 3)))) if i % 2 else DualForm(_rand(rng, k + 1))
        same = SubspaceBasis.span([D.coeffs, G.coeffs], k + 1).dim == 1
        bad["inj"] += (inverse_system_component(D, d) == inverse_system_component(G, d)) != same
    for i in range(200):
        k = rng.randint(1, 5)
        d = rng.randint(k, 9)
        D = DualForm(_rand(rng, k + 1))
        if i % 2:
            inv = inverse_system_component(D, d)
            cs = [rng.randint(-5, 5) for _ in inv.basis.vectors]
            f = BinaryForm(tuple(sum(c * v[j] for c, v in zip(cs, inv.basis.vectors)) for j in range(d + 1)))
            if f.is_zero():
                f = inv.forms()[0]
        else:
            f = BinaryForm(_rand(rng, d + 1))
        forward = orthogonal_component(f, k).contains(D)
        backward = inverse_system_component(D, d).contains(f)
        bad["member"] += forward != backward or bool(i % 2 and not forward)
    for _ in range(100):
        d = rng.randint(1, 12)
        f = BinaryForm(_rand(rng, d + 1))
        dims = [orthogonal_component(f, k).dim for k in range(d + 1)]
        bad["gorenstein"] += any((k + 1) - dims[k] != (d - k + 1) - dims[d - k] for k in range(d + 1))
    return not any(bad.values()), f"failures per property {bad} on 200/200/200/100 instances"


def _cli_lines(argv):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run_cli(argv)
    return code, buf.getvalue()


def criterion_curve_tables():
    problems = []
    code, out = _cli_lines(["predict", "--d", "5", "--n", "3"])
    for row in ("S^0_3: empty", "S^1_4: point", "S^2_5: P^3"):
        if row not in out:
            problems.append(row)
    code2, out2 = _cli_lines(["predict", "--d", "19", "--n", "16"])
    for row in ("S^11_15: point", "S^12_16: P^4", "S^13_17: P^8", "S^14_18: P^12"):
        if row not in out2:
            problems.append(row)
    probe = genericity_probe(make_curve(5, 3, [F1, F2]))
    first = probe.mismatches[0][1] if probe.mismatches else None
    if probe.generic_consistent or first is None or (first.a, first.b) != (0, 3) or first.note != "a unique triple point":
        problems.append("quintic probe")
    ok = code == code2 == 0 and not problems
    return ok, f"tables and probe ({probe.verdict}, S^0_3: {first.note if first else None}); missing {problems}"


def criterion_oracles(matrices: int = 500):
    rng = random.Random(7)
    mismatched = 0
    for _ in range(matrices):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)] for _ in range(m)]
        # make some rows dependent to hit low ranks
        if m > 1 and rng.random() < 0.4:
            rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1 % m])]
        M = RationalMatrix(tuple(tuple(r) for r in rows), n)
        mismatched += rank(M) != gauss_rank(M) or kernel(M).vectors != gauss_kernel(M)
    golden = 0
    for f in (F1, F2, BinaryForm((1, 0, 1)), BinaryForm((1, 0, 0, 0, 0)), BinaryForm((3, -1, 4, 1, -5, 9, 2))):
        for k in range(f.degree + 1):
            C = catalecticant_matrix(f, k)
            golden += kernel(C).vectors != gauss_kernel(C)
    exact_res, numeric_res = [], []
    exact_res.append(verify_decomposition([F1, F2], decompose([F1, F2], 3)).deviation)
    lines = [LinearForm(1, j) for j in range(-3, 4)] + [LinearForm(0, 1)]
    nine = [expand_power_sum(9, [(lf, Fraction(j * s + 1, s + 1)) for j, lf in enumerate(lines)]) for s in (1, 2, 3)]
    W = DualForm((1,))
    for lf in lines:
        W = W * lf.dual()
    dec = decompose_with_witness(nine, W)
    exact_res.append(verify_decomposition(nine, dec).deviation if dec.exact else float("nan"))
    quartic = DualForm((1, 0, 0, 0, 1))
    inv = inverse_system_component(quartic, 7).forms()
    numeric_res.append(verify_decomposition(inv[:2], decompose_with_witness(inv[:2], quartic)).deviation)
    for seed in range(10):
        forms = sample_forms(6, 2, seed=seed)
        dec = decompose(forms, kmin_formula(6, 2), seed)
        (exact_res if dec.exact else numeric_res).append(verify_decomposition(forms, dec).deviation)
    ok = (
        mismatched == 0
        and golden == 0
        and all(r == 0 for r in exact_res)
        and all(r < NUMERIC_RECON_TOL for r in numeric_res)
    )
    return ok, (
        f"{matrices - mismatched}/{matrices} matrices and {'all' if not golden else 'NOT all'} catalecticants agree; "
        f"exact residuals {sorted(set(exact_res))}, max numeric residual {max(numeric_res):.2e}"
    )


CRITERIA = [
    ("1 quintic example", criterion_quintic_example),
    ("2 Sylvester golden tests", criterion_sylvester),
    ("3 theorem validation grid", criterion_theorem_grid),
    ("4 Grassmann bound", criterion_grassmann),
    ("5 property suite", criterion_properties),
    ("6 curve tables", criterion_curve_tables),
    ("7 oracle equivalence", criterion_oracles),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print()
        report(name, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for name, check in CRITERIA:
        ok, detail = check()
        report(name, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
