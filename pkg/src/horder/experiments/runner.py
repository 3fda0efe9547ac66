"""Run a registered suite over seeded trials and collect a report."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import HorderError, UnknownSuite
from ..serialize import dumps, jsonable
from .config import TrialConfig
from .sampling import trial_rng
from .suites import SUITES, TrialContext

NUMERIC_ERRORS = (HorderError, ArithmeticError, ValueError, np.linalg.LinAlgError)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    config: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    warnings: int = 0
    errors: list = field(default_factory=list)
    checks: int = 0
    wall_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and not self.errors

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "config": jsonable(self.config),
            "failures": self.failures,
            "findings": self.findings,
            "warnings": self.warnings,
            "errors": self.errors,
            "checks": self.checks,
            "wall_ms": self.wall_ms,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def run_trial(name: str, config: TrialConfig, index: int) -> dict:
    """One trial, isolated: numeric errors are caught and reported."""
    ctx = TrialContext(index, config, trial_rng(config.seed, index))
    error = None
    try:
        SUITES[name].run(ctx)
    except NUMERIC_ERRORS as exc:
        error = {"trial": index, "input": jsonable(ctx.input), "error": type(exc).__name__, "message": str(exc)}
    return {
        "failures": ctx.failures,
        "findings": ctx.findings,
        "warnings": ctx.warnings,
        "checks": ctx.checks,
        "error": error,
    }


def _run_chunk(args) -> list[dict]:
    name, config, indices = args
    return [run_trial(name, config, i) for i in indices]


def thread_count(env: str = "HORDER_THREADS") -> int:
    """Worker count from the environment: unset means 1, 0 means all cores."""
    raw = os.environ.get(env, "1").strip() or "1"
    n = int(raw)
    if n < 0:
        raise ValueError(f"{env} must be >= 0")
    return n or (os.cpu_count() or 1)


def trial_count(name: str, config: TrialConfig) -> int:
    suite = SUITES[name]
    if suite.cells is not None:
        return min(config.trials, suite.cells(config))
    return config.trials


def run_suite(
    name: str,
    config: TrialConfig | None = None,
    workers: int | None = None,
    timing: bool = False,
) -> SuiteReport:
    """Execute ``config.trials`` trials of suite ``name``.

    Trials draw from ``SeedSequence([seed, trial])`` and are merged in index
    order, so the report does not depend on ``workers``.  ``wall_ms`` stays 0
    unless ``timing`` is set, keeping reports byte-identical across runs.
    """
    if name not in SUITES:
        raise UnknownSuite(name)
    config = config or TrialConfig()
    workers = thread_count() if workers is None else max(1, workers)
    n = trial_count(name, config)
    start = time.perf_counter()
    if workers > 1 and n > 1:
        chunks = [(name, config, list(range(i, n, workers))) for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_chunk, chunks))
        results = sorted(
            ((i, r) for (_, _, idx), part in zip(chunks, parts) for i, r in zip(idx, part)),
            key=lambda item: item[0],
        )
        results = [r for _, r in results]
    else:
        results = _run_chunk((name, config, range(n)))
    report = SuiteReport(suite=name, seed=config.seed, trials=n, config=config.to_dict())
    for r in results:
        report.failures.extend(r["failures"])
        report.findings.extend(r["findings"])
        report.warnings += r["warnings"]
        report.checks += r["checks"]
        if r["error"] is not None:
            report.errors.append(r["error"])
    if timing:
        report.wall_ms = int(round(1000 * (time.perf_counter() - start)))
    return report
