#!/usr/bin/env python3
"""Search for complex P and real lam with Re Z(P) not below Re Z(D_lam P).

Both sampling families are scanned over a range of degrees; any finding is
written out with its re-verification flag.
"""
import argparse
import json
from pathlib import Path

from horder.experiments import TrialConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=10_000, help="per (degree, family) cell")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--degrees", type=int, nargs="+", default=[3, 4, 5, 6, 7, 8])
    ap.add_argument("--bound", type=float, default=5.0, help="disk radius for the roots family")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--findings", type=Path, default=Path("conjecture1_findings.json"))
    args = ap.parse_args()

    findings = []
    for family in ("roots", "coeffs"):
        for n in args.degrees:
            cfg = TrialConfig(
                trials=args.trials,
                seed=args.seed,
                degree_min=n,
                degree_max=n,
                root_bound=args.bound,
                complex_family=family,
            )
            rep = run_suite("conjecture1", cfg, workers=args.workers)
            findings.extend({"family": family, "degree": n, **f} for f in rep.findings)
            print(
                f"{family:6s} n={n}: {rep.trials} trials, {len(rep.findings)} findings, "
                f"{rep.warnings} near misses, {len(rep.errors)} numeric errors"
            )
    args.findings.write_text(json.dumps(findings, indent=2))
    confirmed = sum(f["reverified"] for f in findings)
    print(f"total findings {len(findings)} ({confirmed} re-verified) -> {args.findings}")


if __name__ == "__main__":
    main()
