"""Command line interface: ``apolar <command> ...``.

Exit codes: 0 success, 1 empty result, 2 invalid input, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import io
from .apolarity import DEFAULT_BUDGET, DependentFormsError, compute_kmin, kmin_formula, vsps
from .curves import CenterMeetsCurveError, describe, generic_secant_table, genericity_probe, make_curve
from .decompose import (
    RECON_TOL,
    ROOT_TOL,
    EmptyDecompositionError,
    NumericRootError,
    decompose,
    verify_decomposition,
)
from .harness import RunConfig, validate_grassmann_bound, validate_kmin_theorem
from .kernels import BACKEND

EXIT_OK, EXIT_EMPTY, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3


def _default_seed() -> int:
    try:
        return int(os.environ.get("APOLAR_SEED", "0"))
    except ValueError:
        return 0


def _emit(args, doc: dict, text: str):
    if args.json:
        print(io.dumps(doc))
    else:
        print(text)


def cmd_kmin(args) -> int:
    d, forms = io.load_system(args.input)
    res = compute_kmin(forms, args.seed, args.budget)
    r = len(forms)
    kf = kmin_formula(d, r) if r <= d + 1 else None
    doc = {
        "command": "kmin",
        "d": d,
        "r": r,
        "kmin": res.k,
        "witness": io.dual_json(res.witness),
        "kmin_formula": kf,
        "extended": res.extended,
        "nongeneric_certified": kf is not None and res.k < kf,
    }
    lines = [f"k_min = {res.k}", f"witness: {res.witness}", f"generic value k_min({d},{r}) = {kf}"]
    if doc["nongeneric_certified"]:
        lines.append("below the generic value: the system is not generic")
    if res.extended:
        lines.append("no apolar form up to degree d; used d+1 distinct points")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_vsps(args) -> int:
    d, forms = io.load_system(args.input)
    res = vsps(forms, args.k, args.seed, args.budget)
    basis = res.space.forms()
    doc = {
        "command": "vsps",
        "d": d,
        "k": args.k,
        "dim": res.space.dim,
        "projective_dim": res.projective_dim,
        "basis": [io.form_json(D) for D in basis],
        "squarefree_witness": io.dual_json(res.squarefree_witness),
        "witness_method": res.witness_method,
        "vssp_nonempty": res.vssp_nonempty,
    }
    lines = [f"degree-{args.k} apolar space: dim {res.space.dim} (P^{res.projective_dim})" if basis else f"degree-{args.k} apolar space: 0 (empty)"]
    lines += [f"  {D}" for D in basis]
    if res.vssp_nonempty:
        lines.append(f"squarefree witness ({res.witness_method}): {res.squarefree_witness}")
    else:
        lines.append("no squarefree element: no decomposition with this many terms")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if res.vssp_nonempty else EXIT_EMPTY


def _coef_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    c = complex(c)
    return f"({c.real:.10g}{c.imag:+.10g}j)"


def cmd_decompose(args) -> int:
    d, forms = io.load_system(args.input)
    dec = decompose(forms, args.k, args.seed, args.tol, args.recon_tol, args.budget)
    rep = verify_decomposition(forms, dec, args.recon_tol)
    if not rep.passed:
        raise NumericRootError(f"verification failed: deviation {rep.deviation:.3e}")
    lfs = dec.linear_forms()
    doc = {
        "command": "decompose",
        "d": d,
        "k": dec.k,
        "exact": dec.exact,
        "witness": io.dual_json(dec.witness),
        "points": [io.point_json(p) for p in dec.points],
        "coefficients": [[io.scalar_json(c) for c in row] for row in dec.coefficients],
        "residual": rep.deviation,
    }
    lines = [f"witness: {dec.witness}", f"{'exact' if dec.exact else 'numeric'} decomposition with {dec.k} linear forms:"]
    lf_text = [str(l) if dec.exact else f"{_coef_text(l[0])}*x0 + {_coef_text(l[1])}*x1" for l in lfs]
    for i, row in enumerate(dec.coefficients):
        terms = " + ".join(f"{_coef_text(c)}*({t})^{d}" for c, t in zip(row, lf_text)).replace("+ -", "- ")
        lines.append(f"  f{i + 1} = {terms}")
    lines.append(f"reconstruction residual: {rep.deviation:.3g}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _label(dim) -> str:
    if dim is None or dim < 0:
        return "empty"
    return "point" if dim == 0 else f"P^{dim}"


def cmd_curve(args) -> int:
    d, forms = io.load_system(args.input)
    curve = make_curve(d, args.n, forms)
    probe = genericity_probe(curve, args.seed, args.budget)
    rows = []
    lines = [f"curve of degree {d} in P^{args.n}, center of dimension {curve.r}"]
    for pred, rep in probe.rows:
        row = {
            "a": rep.a,
            "b": rep.b,
            "projective_dim": rep.projective_dim,
            "smooth_part_nonempty": rep.smooth_part_nonempty,
            "witness": io.dual_json(rep.witness),
            "note": rep.note,
            "generic_prediction": pred.dim,
        }
        rows.append(row)
        line = f"  S^{rep.a}_{rep.b}: {_label(rep.projective_dim)}, smooth part {'nonempty' if rep.smooth_part_nonempty else 'empty'} ({rep.note})"
        if args.table:
            line += f"; generic: {pred.label()}"
        lines.append(line)
    lines.append(f"verdict: {probe.verdict}")
    for pred, rep in probe.mismatches:
        lines.append(f"  mismatch at S^{rep.a}_{rep.b}: generic {pred.label()}, computed {_label(rep.projective_dim)}; witness {rep.witness}")
    doc = {"command": "curve", "d": d, "n": args.n, "rows": rows, "verdict": probe.verdict, "generic_consistent": probe.generic_consistent}
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_predict(args) -> int:
    rows = generic_secant_table(args.d, args.n)
    r = args.d - args.n
    kmin = kmin_formula(args.d, r)
    lines = [f"generic rational curve of degree {args.d} in P^{args.n}: r = {r}, k_min({args.d},{r}) = {kmin}"]
    for row in rows:
        lines.append(f"  S^{row.a}_{row.b}: {row.label()}  ({describe(row.a, row.b, row.dim, row.dim is not None)})")
    doc = {
        "command": "predict",
        "d": args.d,
        "n": args.n,
        "kmin": kmin,
        "rows": [{"a": row.a, "b": row.b, "dim": row.dim, "label": row.label()} for row in rows],
    }
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _parse_grid(s: str) -> tuple[tuple[int, int], tuple[int, int]]:
    try:
        dpart, rpart = s.split(",")
        d0, d1 = (int(x) for x in dpart.split(":"))
        r0, r1 = (int(x) for x in rpart.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError("grid must look like DMIN:DMAX,RMIN:RMAX") from e
    return (d0, d1), (r0, r1)


def cmd_validate(args) -> int:
    (d_range, r_range) = args.grid
    cfg = RunConfig(
        seed=args.seed,
        trials=args.trials,
        d_range=d_range,
        r_range=r_range,
        coeff_bound=args.bound,
        budget=args.budget,
        resample_nongeneric=args.resample_nongeneric,
        jobs=args.jobs,
    )
    thm = validate_kmin_theorem(cfg)
    gb = validate_grassmann_bound(cfg)
    doc = {
        "command": "validate",
        "config": {
            "seed": cfg.seed,
            "trials": cfg.trials,
            "d_range": list(d_range),
            "r_range": list(r_range),
            "coeff_bound": cfg.coeff_bound,
        },
        "theorem": thm.to_json(),
        "grassmann": gb.to_json(),
    }
    lines = [
        f"theorem: {thm.agreements}/{thm.trials} trials agree ({100 * thm.agreement_rate:.2f}%), "
        f"{thm.nongeneric} non-generic (certified), {thm.unexplained} unexplained",
        f"grassmann bound: {gb.cases - len(gb.failures)}/{gb.cases} nonzero",
    ]
    for rep in thm.worst():
        lines.append(f"  d={rep.d} r={rep.r} trial={rep.trial}: {rep.certificate or 'UNEXPLAINED'}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if thm.passed and gb.passed else EXIT_EMPTY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="apolar", description="Simultaneous Waring decompositions of binary forms.")
    p.add_argument("--version", action="version", version=f"apolar 0.1.0 ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if seed:
            sp.add_argument("--seed", type=int, default=_default_seed(), help="random seed (default $APOLAR_SEED or 0)")
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="random witness trials per degree")

    sp = sub.add_parser("kmin", help="minimal number of simultaneous summands")
    sp.add_argument("input", help="JSON system, '-' for stdin, or fixture:<name>")
    common(sp)
    sp.set_defaults(fn=cmd_kmin)

    sp = sub.add_parser("vsps", help="degree-k simultaneous apolar space")
    sp.add_argument("input")
    sp.add_argument("--k", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_vsps)

    sp = sub.add_parser("decompose", help="explicit decomposition with k linear forms")
    sp.add_argument("input")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--tol", type=float, default=ROOT_TOL, help="root residual tolerance")
    sp.add_argument("--recon-tol", type=float, default=RECON_TOL, help="reconstruction tolerance")
    common(sp)
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("curve", help="extremal secant spaces of a projected rational normal curve")
    sp.add_argument("input", help="center forms of the projection")
    sp.add_argument("--n", type=int, required=True, help="target projective dimension")
    sp.add_argument("--table", action="store_true", help="show the generic prediction next to each row")
    common(sp)
    sp.set_defaults(fn=cmd_curve)

    sp = sub.add_parser("predict", help="generic secant table from the closed formulas")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp, seed=False)
    sp.set_defaults(fn=cmd_predict)

    sp = sub.add_parser("validate", help="Monte Carlo check of the generic formulas")
    sp.add_argument("--grid", type=_parse_grid, default=((1, 12), (1, 4)), help="DMIN:DMAX,RMIN:RMAX")
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--bound", type=int, default=10, help="coefficient bound B")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--resample-nongeneric", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_validate)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        return args.fn(args)
    except EmptyDecompositionError as e:
        print(f"empty: {e}", file=sys.stderr)
        return EXIT_EMPTY
    except NumericRootError as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except (io.InputError, DependentFormsError, CenterMeetsCurveError, ValueError, KeyError, TypeError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
