"""Seeded verification suites and the report runner."""
from .config import DEFAULT_LAMBDAS, TrialConfig
from .runner import SuiteReport, run_suite, run_trial
from .sampling import random_complex, random_hyperbolic, trial_rng
from .suites import SUITES, LocalViolation, dyadic_ladder, falsify_local

__all__ = [
    "DEFAULT_LAMBDAS",
    "LocalViolation",
    "SUITES",
    "SuiteReport",
    "TrialConfig",
    "dyadic_ladder",
    "falsify_local",
    "random_complex",
    "random_hyperbolic",
    "run_suite",
    "run_trial",
    "trial_rng",
]
