#!/usr/bin/env python3
"""Incomparability margins for z^n - 1 and for real-rooted P under complex lam.

For each case the table lists the phase-1 objective of both LP directions;
a positive objective is the amount by which no doubly stochastic witness
exists, so both columns positive means Incomparable.
"""
import argparse

import numpy as np

from horder.experiments import TrialConfig
from horder.experiments.sampling import strict_sample_roots, trial_rng
from horder.experiments.suites import zn_cells
from horder.order import compare_point_sets
from horder.polynomials import Polynomial, from_roots
from horder.rootfinding import all_roots, d_lambda_roots


def row(label, P, lam):
    v = compare_point_sets(all_roots(P), d_lambda_roots(P, lam))
    f, b = v.evidence["forward"]["objective"], v.evidence["backward"]["objective"]
    print(f"{label:28s} {lam.real:+8.4f}{lam.imag:+8.4f}i  {f:10.3e} {b:10.3e}  {v.relation.value}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=5, help="number of random real-rooted P")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cfg = TrialConfig(seed=args.seed)
    print(f"{'P':28s} {'lambda':>17s}  {'P<=DP obj':>10s} {'DP<=P obj':>10s}  relation")
    for n, lam in zn_cells(cfg):
        c = np.zeros(n + 1, dtype=complex)
        c[0], c[-1] = -1, 1
        row(f"z^{n} - 1", Polynomial(c), complex(lam))
    for t in range(args.random):
        rng = trial_rng(args.seed, t)
        r = strict_sample_roots(int(rng.integers(3, 9)), cfg, rng)
        for lam in cfg.complex_lambdas:
            row(f"random real-rooted n={len(r)}", from_roots(r.values), complex(lam))


if __name__ == "__main__":
    main()
