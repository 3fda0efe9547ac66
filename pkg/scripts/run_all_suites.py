#!/usr/bin/env python3
"""Run every registered suite at acceptance scale and save the JSON reports.

    python3 scripts/run_all_suites.py --out reports/ --seed 1
"""
import argparse
import time
from pathlib import Path

from horder.experiments import SUITES, TrialConfig, run_suite

SCALE = {
    "orbit": 1000,
    "semigroup_order": 500,
    "derivative_order": 500,
    "global_monotone": 500,
    "convexity": 300,
    "local_falsify": 200,
    "velocity_formula": 200,
    "curvature_formula": 200,
    "interlace_trajectory": 200,
    "obreschkoff_pencil": 200,
    "counterexample_zn": 27,
    "counterexample_complex_lambda": 100,
    "conjecture1": 10_000,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every trial count")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--only", nargs="*", choices=sorted(SUITES))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    print(f"{'suite':30s} {'trials':>7s} {'checks':>8s} {'fail':>5s} {'warn':>5s} {'err':>4s} {'find':>5s} {'sec':>7s}")
    bad = 0
    for name in args.only or SUITES:
        trials = max(1, round(SCALE[name] * args.scale))
        t = time.perf_counter()
        rep = run_suite(name, TrialConfig(trials=trials, seed=args.seed), workers=args.workers, timing=True)
        (args.out / f"{name}.json").write_text(rep.to_json())
        bad += bool(rep.failures or rep.errors)
        print(
            f"{name:30s} {rep.trials:7d} {rep.checks:8d} {len(rep.failures):5d} {rep.warnings:5d} "
            f"{len(rep.errors):4d} {len(rep.findings):5d} {time.perf_counter() - t:7.1f}"
        )
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
