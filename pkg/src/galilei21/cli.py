"""Batch driver: every verification suite as a command with stable output.

Exit status: 0 when all checks pass, 1 when any check fails, 2 for a
configuration problem.  All randomness is seeded, so a fixed
(command, options) pair produces byte-identical reports.

Rational charges are given as exact strings on the command line
(``--k 1/2``); grids as ``lo:hi:logxF`` (multiply by F from lo until hi)
or an explicit comma list.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import algebra, contraction, enveloping, group
from .algebra import ExtensionParams

DEGREE_CAP_DEFAULT = 4


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _c_grid(text: str) -> tuple:
    try:
        if ":" in text:
            lo_s, hi_s, step = text.split(":")
            if not step.startswith("logx"):
                raise ValueError("step must look like logx10")
            lo, hi, factor = float(lo_s), float(hi_s), float(step[4:])
            if lo <= 0 or factor <= 1:
                raise ValueError("grid must be positive and growing")
            grid = []
            c = lo
            while c <= hi * (1 + 1e-9):
                grid.append(c)
                c *= factor
            return tuple(grid)
        return tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad c grid {text!r}: {exc}") from exc


def _check(name: str, defect, passed: bool, note: str | None = None) -> dict:
    row = {
        "name": name,
        "defect": str(defect) if isinstance(defect, Fraction) else float(defect),
        "pass": bool(passed),
    }
    if note:
        row["note"] = note
    return row


def _skip(name: str, note: str) -> dict:
    return {"name": name, "defect": None, "pass": True, "note": note}


# --- commands ---------------------------------------------------------------


def cmd_verify_algebra(opts) -> dict:
    params = ExtensionParams(opts.k, opts.m, opts.l)
    alg = algebra.make_galilei_algebra(params)
    rng = random.Random(opts.seed)
    checks = [
        _check("antisymmetry", algebra.antisymmetry_defect(alg),
               algebra.antisymmetry_defect(alg) == 0),
        _check("jacobi", algebra.jacobi_defect(alg), algebra.jacobi_defect(alg) == 0),
    ]

    worst = Fraction(0)
    boundary = [
        ExtensionParams(0, 0, 0),
        ExtensionParams(0, params.m, params.l),
        ExtensionParams(params.k, 0, params.l),
        ExtensionParams(params.k, params.m, 0),
    ]
    for p in boundary + [algebra.random_params(rng) for _ in range(opts.samples)]:
        worst = max(worst, algebra.jacobi_defect(algebra.make_galilei_algebra(p)))
    checks.append(_check("jacobi_random_charges", worst, worst == 0))

    if params.m == 0:
        checks.append(_skip("k_removal", "m=0: hypothesis violated; skipped"))
    else:
        moved = algebra.apply_basis_change(alg, algebra.eliminate_k_change(params))
        target = algebra.make_galilei_algebra(ExtensionParams(0, params.m, params.l))
        ok = algebra.algebras_equal(moved, target)
        checks.append(_check("k_removal", Fraction(0 if ok else 1), ok))

    bad = 0
    for _ in range(min(opts.samples, 50)):
        p = algebra.random_params(rng, nonzero_m=True)
        moved = algebra.apply_basis_change(
            algebra.make_galilei_algebra(p), algebra.eliminate_k_change(p)
        )
        if not algebra.algebras_equal(
            moved, algebra.make_galilei_algebra(ExtensionParams(0, p.m, p.l))
        ):
            bad += 1
    checks.append(_check("k_removal_random_charges", Fraction(bad), bad == 0))
    return checks


def _expected_centrality(params: ExtensionParams) -> dict:
    return {
        "internal_energy": params.m != 0 and params.l == 0,
        "internal_angular_momentum": params.m != 0 and params.l == 0,
        "momentum_squared": params.m == 0,
        "boost_momentum_cross": params.m == 0 and params.k == 0,
    }


def cmd_casimir(opts) -> dict:
    params = ExtensionParams(opts.k, opts.m, opts.l)
    alg = algebra.make_galilei_algebra(params)
    checks = []
    candidates = {
        "momentum_squared": enveloping.momentum_squared(),
        "boost_momentum_cross": enveloping.boost_momentum_cross(),
    }
    if params.m != 0:
        candidates["internal_energy"] = enveloping.internal_energy(params)
        candidates["internal_angular_momentum"] = enveloping.internal_angular_momentum(params)
    expected = _expected_centrality(params)
    for name in sorted(candidates):
        poly = candidates[name]
        defect = Fraction(0)
        for gen in enveloping.GEN_NAMES:
            com = enveloping.no_commutator(alg, poly, enveloping.NOPoly.generator(gen))
            defect = max(defect, com.max_abs_coefficient())
        central = defect == 0
        checks.append(
            _check(
                f"central[{name}]", defect, central == expected[name],
                note=f"expected {'central' if expected[name] else 'non-central'}",
            )
        )
    if params.m != 0:
        # the commutator of the rotation generator with the internal energy
        # measures the time-rotation charge exactly
        com = enveloping.no_commutator(
            alg, enveloping.NOPoly.generator("M"), enveloping.internal_energy(params)
        )
        ok = com == enveloping.NOPoly.scalar(params.l)
        checks.append(_check("energy_defect_equals_l", Fraction(0 if ok else 1), ok))

    basis = enveloping.centralizer_basis(alg, opts.max_degree)
    dim_note = f"basis: {'; '.join(repr(e) for e in basis.elements)}"
    if params.m != 0 and params.l != 0:
        checks.append(
            _check("centralizer_dimension", Fraction(basis.dimension),
                   basis.dimension == 1, note="scalars only expected; " + dim_note)
        )
    elif params.m != 0 and opts.max_degree == 2:
        checks.append(
            _check("centralizer_dimension", Fraction(basis.dimension),
                   basis.dimension == 3, note=dim_note)
        )
    else:
        checks.append(
            _check("centralizer_dimension", Fraction(basis.dimension), True,
                   note="reported; " + dim_note)
        )
    return checks


def cmd_group(opts) -> dict:
    params = ExtensionParams(opts.k, opts.m, opts.l)
    rng = random.Random(opts.seed)
    tol = opts.tolerance
    checks = []

    worst = 0.0
    for _ in range(opts.samples):
        g, h, f = (group.random_element(rng) for _ in range(3))
        worst = max(worst, group.associativity_defect(group.GroupKind.COVERING, params, g, h, f))
    checks.append(_check("associativity_covering", worst, worst < tol))

    if params.l == 0:
        worst = 0.0
        for _ in range(opts.samples):
            g, h, f = (group.random_element(rng) for _ in range(3))
            worst = max(worst, group.associativity_defect(group.GroupKind.EXTENDED, params, g, h, f))
        checks.append(_check("associativity_extended", worst, worst < tol))
    else:
        checks.append(_skip("associativity_extended", "l != 0 lives on the covering only"))

    exact_worst = Fraction(0)
    for _ in range(min(opts.samples, 200)):
        g, h, f = (group.random_rational_element(rng) for _ in range(3))
        d = group.associativity_defect(group.GroupKind.COVERING, params, g, h, f)
        exact_worst = max(exact_worst, Fraction(d))
    checks.append(_check("associativity_exact_mode", exact_worst, exact_worst == 0))

    worst = 0.0
    for _ in range(min(opts.samples, 200)):
        g = group.random_element(rng)
        gi = group.inverse(group.GroupKind.COVERING, params, g)
        worst = max(
            worst,
            group.element_distance(group.compose(group.GroupKind.COVERING, params, g, gi), group.IDENTITY),
            group.element_distance(group.compose(group.GroupKind.COVERING, params, gi, g), group.IDENTITY),
        )
    checks.append(_check("inverse_round_trip", worst, worst < tol))

    if params.m == 0:
        checks.append(_skip("k_removal_homomorphism", "m=0: hypothesis violated; skipped"))
    else:
        p_k = ExtensionParams(params.k, params.m, 0)
        p_0 = ExtensionParams(0, params.m, 0)
        phi = lambda g: group.eliminate_k_map(p_k, g)
        worst = 0.0
        for _ in range(opts.samples):
            g, h = group.random_element(rng), group.random_element(rng)
            worst = max(
                worst,
                group.homomorphism_defect(group.GroupKind.EXTENDED, p_k, p_0, phi, g, h),
            )
        checks.append(_check("k_removal_homomorphism", worst, worst < tol))
        exact_worst = Fraction(0)
        for _ in range(min(opts.samples, 200)):
            g, h = group.random_rational_element(rng), group.random_rational_element(rng)
            d = group.homomorphism_defect(group.GroupKind.EXTENDED, p_k, p_0, phi, g, h)
            exact_worst = max(exact_worst, Fraction(d))
        checks.append(_check("k_removal_homomorphism_exact", exact_worst, exact_worst == 0))

    base_xi = lambda g, h: group.cocycle_exponent(group.GroupKind.COVERING, params, g, h)
    zeta = lambda g: 0.37 * g.v[0] * g.u[0] - 0.11 * g.tau * g.theta + 0.2 * g.v[1] ** 2
    shifted = group.apply_coboundary(base_xi, zeta)
    worst = 0.0
    for _ in range(min(opts.samples, 300)):
        g, h, f = (group.random_element(rng) for _ in range(3))
        left = group.compose_with_exponent(group.compose_with_exponent(g, h, shifted), f, shifted)
        right = group.compose_with_exponent(g, group.compose_with_exponent(h, f, shifted), shifted)
        worst = max(worst, group.element_distance(left, right))
    checks.append(_check("coboundary_invariance", worst, worst < 10 * tol))
    return checks


def cmd_contract(opts) -> dict:
    rng = random.Random(opts.seed)
    grid = opts.c_grid
    experiments = contraction.sample_experiments(opts.experiment, rng, opts.samples, min(grid))
    checks = []
    rows = []
    for i, exp in enumerate(experiments):
        rep = contraction.convergence_study(exp, grid)
        slope_err = abs(rep.fitted_slope - (-2.0))
        row = _check(f"slope[{i}]", slope_err, slope_err <= opts.tolerance)
        row.update(contraction.report_summary(rep, slope_tolerance=opts.tolerance))
        checks.append(row)
        if opts.experiment == "thomas" and rep.target != 0:
            rel = rep.errors[-1] / abs(rep.target)
            checks.append(_check(f"limit_agreement[{i}]", rel, rel <= 1e-3))
        if opts.experiment == "mass":
            gs = contraction.growth_slope(rep)
            checks.append(
                _check(f"zeta_growth[{i}]", abs(gs - 2.0), abs(gs - 2.0) <= opts.tolerance,
                       note="trivializing function must diverge like c^2")
            )
        for c, err, zmag in contraction.report_csv_rows(rep):
            rows.append((i, c, err, zmag))
    return checks, rows


# --- report assembly ----------------------------------------------------------


def _render(report: dict, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        lines = ["command,seed,params,check,defect,pass"]
        cfg = report["config"]
        params = "k={k} m={m} l={l}".format(**cfg) if "k" in cfg else ""
        for c in report["checks"]:
            lines.append(
                f"{report['command']},{cfg.get('seed', '')},{params},"
                f"{c['name']},{c['defect']},{int(c['pass'])}"
            )
        if rows:
            lines.append("sample,c,error,zeta_magnitude")
            for sample, c, err, zmag in rows:
                lines.append(f"{sample},{c!r},{err!r},{zmag!r}")
        return "\n".join(lines) + "\n"
    # human
    lines = [f"== {report['command']} =="]
    for key, val in sorted(report["config"].items()):
        lines.append(f"   {key} = {val}")
    for c in report["checks"]:
        status = "PASS" if c["pass"] else "FAIL"
        note = f"  ({c['note']})" if "note" in c else ""
        lines.append(f"{status:4s} {c['name']}: defect={c['defect']}{note}")
    lines.append("overall: " + ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _config_dict(opts) -> dict:
    cfg = {}
    for key in ("k", "m", "l"):
        if hasattr(opts, key):
            cfg[key] = str(getattr(opts, key))
    for key in ("seed", "samples", "max_degree", "tolerance", "experiment"):
        if hasattr(opts, key):
            cfg[key] = getattr(opts, key)
    if hasattr(opts, "c_grid"):
        cfg["c_grid"] = list(opts.c_grid)
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galilei21",
        description="verification suites for the extended planar Galilei group",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, charges=True, sampling=True):
        if charges:
            p.add_argument("--k", type=_rational, default=Fraction(0))
            p.add_argument("--m", type=_rational, default=Fraction(0))
            p.add_argument("--l", type=_rational, default=Fraction(0))
        if sampling:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv", "human"), default="human")
        p.add_argument("--out", default=None, help="write the report to this path")

    p = sub.add_parser("verify-algebra", help="Jacobi, antisymmetry and charge-removal suites")
    common(p)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_verify_algebra)

    p = sub.add_parser("casimir", help="invariant table and bounded-degree centralizer")
    common(p)
    p.add_argument("--max-degree", type=int, default=2, dest="max_degree")
    p.add_argument("--degree-cap", type=int, default=DEGREE_CAP_DEFAULT, dest="degree_cap")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("group", help="cocycle, inverse, coboundary and isomorphism suites")
    common(p)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("contract", help="large-c limit experiments with slope fits")
    common(p, charges=False)
    p.add_argument("--experiment", choices=contraction.EXPERIMENT_NAMES, required=True)
    p.add_argument("--c-grid", type=_c_grid, default=contraction.DEFAULT_C_GRID, dest="c_grid")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tolerance", type=float, default=0.1,
                   help="allowed deviation of the fitted slope from -2")
    p.set_defaults(func=cmd_contract)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(opts, "samples", 1) < 1:
        print("samples must be positive", file=sys.stderr)
        return 2
    if getattr(opts, "max_degree", 0) > getattr(opts, "degree_cap", DEGREE_CAP_DEFAULT):
        print(
            f"max degree {opts.max_degree} exceeds the cap {opts.degree_cap}",
            file=sys.stderr,
        )
        return 2
    if getattr(opts, "max_degree", 0) < 0:
        print("max degree must be non-negative", file=sys.stderr)
        return 2
    rows = None
    try:
        result = opts.func(opts)
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, tuple):
        checks, rows = result
    else:
        checks = result
    report = {
        "command": opts.command,
        "config": _config_dict(opts),
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
    text = _render(report, rows, opts.format)
    if opts.out:
        with open(opts.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
