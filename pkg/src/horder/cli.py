"""horder: command-line front end.

Exit codes: 0 success or relation holds, 1 relation fails or a
counterexample was found, 2 usage or input error, 3 numeric failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .contractions import chain_decompose
from .errors import HorderError, NotDoublyStochastic, NotMajorized
from .experiments import SUITES, SuiteReport, TrialConfig, run_suite
from .experiments.runner import thread_count
from .order import (
    Relation,
    birkhoff_decompose,
    classical_witness,
    compare_complex,
    compare_hyperbolic,
    compare_real_parts,
)
from .polynomials import Polynomial, apply_d_lambda
from .rootfinding import all_roots, cluster_roots, d_lambda_root_multiset, is_hyperbolic, real_root_multiset
from .serialize import dumps, polynomial_from_json, polynomial_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class SweepTable:
    """Tabular output of ``sweep``: one row per lambda."""

    header: list
    rows: list

    def to_dict(self) -> dict:
        return {"columns": self.header, "rows": self.rows}


def format_report(report, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(report) + "\n"
    if fmt == "csv":
        if not isinstance(report, SweepTable):
            raise UsageError("csv output is only available for sweep tables")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(report.header)
        for row in report.rows:
            w.writerow([repr(float(v)) for v in row])
        return buf.getvalue()
    raise UsageError(f"unknown format {fmt!r}")


# --- input parsing -------------------------------------------------------------------


def _load(text: str):
    """Inline JSON, '-' for standard input, or a path to a JSON file."""
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("{", "[")):
        path = Path(text)
        if not path.is_file():
            raise UsageError(f"not JSON and not a file: {text!r}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def parse_polynomial(text: str) -> Polynomial:
    try:
        return polynomial_from_json(_load(text))
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def parse_values(text: str) -> np.ndarray:
    """A real multiset: a JSON list of numbers or a hyperbolic polynomial."""
    obj = _load(text)
    if isinstance(obj, dict):
        p = parse_polynomial(json.dumps(obj))
        return np.sort(all_roots(p).values.real) if not p.is_real else _real_zeros(p)
    if not isinstance(obj, list) or not obj or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj
    ):
        raise UsageError("expected a nonempty JSON list of real numbers")
    return np.array(obj, dtype=float)


def _real_zeros(p: Polynomial) -> np.ndarray:
    return real_root_multiset(p).values


def parse_complex(text: str) -> complex:
    try:
        re_, im_ = (float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--complex-lambda expects 're,im', got {text!r}") from None
    return complex(re_, im_)


# --- subcommands ---------------------------------------------------------------------


def cmd_roots(args):
    p = parse_polynomial(args.poly)
    roots = all_roots(p)
    clusters = cluster_roots(p, roots.values)
    return EXIT_OK, {
        "roots": [complex(z) for z in roots.values],
        "clusters": [{"center": complex(c), "multiplicity": m} for c, m in clusters],
    }


def cmd_hyperbolic(args):
    p = parse_polynomial(args.poly)
    ok = is_hyperbolic(p, args.eps)
    out = {"hyperbolic": ok}
    if ok:
        out["roots"] = _real_zeros(p)
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_dlam(args):
    p = parse_polynomial(args.poly)
    if (args.lam is None) == (args.complex_lam is None):
        raise UsageError("give exactly one of --lambda and --complex-lambda")
    lam = args.lam if args.lam is not None else parse_complex(args.complex_lam)
    return EXIT_OK, polynomial_to_json(apply_d_lambda(p, lam))


COMPARE = {"hyperbolic": compare_hyperbolic, "complex": compare_complex, "realparts": compare_real_parts}


def cmd_compare(args):
    P, Q = parse_polynomial(args.p), parse_polynomial(args.q)
    verdict = COMPARE[args.mode](P, Q, args.tol)
    holds = verdict.relation in (Relation.LESS, Relation.EQUIVALENT)
    return (EXIT_OK if holds else EXIT_FAIL), verdict.to_dict()


def cmd_witness(args):
    X, Y = parse_values(args.x), parse_values(args.y)
    if X.size != Y.size:
        raise UsageError("multisets must have the same size")
    try:
        A = classical_witness(X, Y, args.tol)
    except NotMajorized as exc:
        return EXIT_FAIL, {"majorized": False, "reason": str(exc)}
    return EXIT_OK, {"majorized": True, "x": np.sort(X), "y": np.sort(Y), "matrix": A.tolist()}


def cmd_birkhoff(args):
    obj = _load(args.matrix)
    try:
        A = np.array(obj, dtype=float)
    except (TypeError, ValueError):
        raise UsageError("matrix must be a JSON list of equal-length numeric rows") from None
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.size == 0:
        raise UsageError("matrix must be square and nonempty")
    try:
        terms = birkhoff_decompose(A)
    except NotDoublyStochastic as exc:
        return EXIT_FAIL, {"doubly_stochastic": False, "reason": str(exc)}
    return EXIT_OK, {"terms": [{"weight": w, "perm": list(p)} for w, p in terms]}


def cmd_chain(args):
    Y, X = parse_values(args.source), parse_values(args.target)
    if X.size != Y.size:
        raise UsageError("multisets must have the same size")
    try:
        chain = chain_decompose(Y, X, args.tol, allow_degenerate=args.allow_degenerate)
    except NotMajorized as exc:
        return EXIT_FAIL, {"majorized": False, "reason": str(exc)}
    return EXIT_OK, chain.to_dict()


def sweep_table(p: Polynomial, lambdas) -> SweepTable:
    n = p.degree
    header = (
        ["lambda"]
        + [f"root_{i}" for i in range(1, n + 1)]
        + ["max", "min", "spread"]
        + [f"top_{k}" for k in range(1, n)]
    )
    rows = []
    for lam in lambdas:
        r = d_lambda_root_multiset(p, float(lam)).values
        top = np.cumsum(r[::-1])[: n - 1]
        rows.append([float(lam), *r, r[-1], r[0], r[-1] - r[0], *top])
    return SweepTable(header, rows)


def cmd_sweep(args):
    p = parse_polynomial(args.poly)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    if args.steps == 1:
        lambdas = [args.lambda_min]
    else:
        lambdas = np.linspace(args.lambda_min, args.lambda_max, args.steps)
    return EXIT_OK, sweep_table(p, lambdas)


def _suite_config(args, **extra) -> TrialConfig:
    fields = {"trials": args.trials, "seed": args.seed, **extra}
    if getattr(args, "degree_min", None) is not None:
        fields["degree_min"] = args.degree_min
    if getattr(args, "degree_max", None) is not None:
        fields["degree_max"] = args.degree_max
    try:
        return TrialConfig(**fields)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report_exit(report: SuiteReport, finding_only: bool) -> int:
    if report.failures or (finding_only and report.findings):
        return EXIT_FAIL
    if report.errors:
        return EXIT_NUMERIC
    return EXIT_OK


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    try:
        return thread_count()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args):
    config = _suite_config(args)
    report = run_suite(args.suite, config, workers=_workers(args), timing=args.timing)
    return _report_exit(report, SUITES[args.suite].finding_only), report


def cmd_conjecture1(args):
    config = _suite_config(args, complex_family=args.family)
    report = run_suite("conjecture1", config, workers=_workers(args), timing=args.timing)
    return _report_exit(report, True), report


# --- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="horder", description="Spectral order of polynomial zeros under D_lam.")
    ap.add_argument("-o", "--output", help="write the result here instead of standard output")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    poly_help = 'polynomial as JSON ({"coeffs": [...]} or {"roots": [...]}), a file path, or -'

    p = add("roots", cmd_roots, "all complex zeros with cluster multiplicities")
    p.add_argument("poly", help=poly_help)

    p = add("hyperbolic", cmd_hyperbolic, "test whether all zeros are real")
    p.add_argument("poly", help=poly_help)
    p.add_argument("--eps", type=float, default=1e-8, help="imaginary-part tolerance")

    p = add("dlam", cmd_dlam, "apply D_lam")
    p.add_argument("poly", help=poly_help)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--complex-lambda", dest="complex_lam", metavar="RE,IM")

    p = add("compare", cmd_compare, "order relation between the zero sets of P and Q")
    p.add_argument("p", help=poly_help)
    p.add_argument("q", help=poly_help)
    p.add_argument("--mode", choices=sorted(COMPARE), default="hyperbolic")
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("witness", cmd_witness, "doubly stochastic A with x = A y")
    p.add_argument("x", help="JSON list of reals or a hyperbolic polynomial")
    p.add_argument("y", help="JSON list of reals or a hyperbolic polynomial")
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("birkhoff", cmd_birkhoff, "convex combination of permutation matrices")
    p.add_argument("matrix", help="square JSON matrix")

    p = add("chain", cmd_chain, "simple contractions leading from one multiset to another")
    p.add_argument("--from", dest="source", required=True, help="majorizing multiset")
    p.add_argument("--to", dest="target", required=True, help="majorized multiset")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--allow-degenerate", action="store_true")

    p = add("sweep", cmd_sweep, "zeros of D_lam P along a lambda grid")
    p.add_argument("poly", help=poly_help)
    p.add_argument("--lambda-min", type=float, default=-1.0)
    p.add_argument("--lambda-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=21)

    def suite_flags(p):
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--degree-min", type=int)
        p.add_argument("--degree-max", type=int)
        p.add_argument("--workers", type=int, help="process count (default: HORDER_THREADS or 1)")
        p.add_argument("--timing", action="store_true", help="record wall time in the report")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    suite_flags(p)

    p = add("conjecture1", cmd_conjecture1, "search for real-part counterexamples")
    suite_flags(p)
    p.add_argument("--family", choices=("roots", "coeffs", "both"), default="both")
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, result = args.func(args)
        text = format_report(result, args.format)
    except UsageError as exc:
        print(f"horder: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"horder: numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (HorderError, ValueError) as exc:
        print(f"horder: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


__all__ = ["SweepTable", "format_report", "main", "run", "sweep_table"]
