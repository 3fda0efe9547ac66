#!/usr/bin/env python3
"""CSV of max, min and spread of Z(D_lam P) along a lambda grid, for plotting."""
import argparse
import sys

import numpy as np

from horder.cli import format_report, sweep_table
from horder.experiments import TrialConfig, random_hyperbolic, trial_rng


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--span", type=float, default=2.0)
    ap.add_argument("--points", type=int, default=81)
    args = ap.parse_args()

    P = random_hyperbolic(args.degree, TrialConfig(), trial_rng(args.seed, 0))
    table = sweep_table(P, np.linspace(-args.span, args.span, args.points))
    sys.stdout.write(format_report(table, "csv"))


if __name__ == "__main__":
    main()
