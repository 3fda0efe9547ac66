"""Random instances for the verification suites."""
from __future__ import annotations

import numpy as np

from ..polynomials import Polynomial, from_roots
from ..rootfinding import RootMultiset, strictify
from .config import TrialConfig


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream per trial, so results do not depend on scheduling."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def random_degree(config: TrialConfig, rng: np.random.Generator, minimum: int = 1) -> int:
    lo = max(config.degree_min, minimum)
    hi = max(config.degree_max, lo)
    return int(rng.integers(lo, hi + 1))


def random_roots(n: int, config: TrialConfig, rng: np.random.Generator, strict=None, min_gap=None) -> np.ndarray:
    strict = config.strict if strict is None else strict
    min_gap = config.min_gap if min_gap is None else min_gap
    L = config.root_bound
    while True:
        r = np.sort(rng.uniform(-L, L, n))
        if not strict or n < 2 or np.min(np.diff(r)) >= min_gap:
            return r


def random_hyperbolic(n: int, config: TrialConfig, rng: np.random.Generator) -> Polynomial:
    """Monic polynomial with n i.i.d. uniform zeros on [-L, L]."""
    return from_roots(random_roots(n, config, rng))


def strict_sample_roots(n: int, config: TrialConfig, rng: np.random.Generator) -> RootMultiset:
    """Simple zeros for the suites that must never fail.

    With probability ``multiple_fraction`` one zero is duplicated and the
    multiset is then strictified, standing in for a limit over repeated zeros.
    """
    if n >= 2 and rng.random() < config.multiple_fraction:
        r = random_roots(n - 1, config, rng)
        r = np.sort(np.append(r, r[rng.integers(n - 1)]))
        eps = float(rng.choice(config.strictify_eps))
        return strictify(RootMultiset(r), eps)
    return RootMultiset(random_roots(n, config, rng))


def random_complex(n: int, config: TrialConfig, rng: np.random.Generator, family: str) -> Polynomial:
    """Zeros uniform on the disk |z| <= L, or i.i.d. complex Gaussian coefficients."""
    if family == "roots":
        rad = config.root_bound * np.sqrt(rng.random(n))
        ang = rng.uniform(0, 2 * np.pi, n)
        return from_roots(rad * np.exp(1j * ang))
    if family == "coeffs":
        c = (rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)) / np.sqrt(2)
        c[-1] = 1
        return Polynomial(c)
    raise ValueError(f"unknown family {family!r}")


def random_doubly_stochastic(n: int, rng: np.random.Generator, terms: int | None = None) -> np.ndarray:
    """Convex combination of random permutation matrices."""
    terms = terms or int(rng.integers(1, n + 2))
    w = rng.dirichlet(np.ones(terms))
    eye = np.eye(n)
    return sum(wi * eye[rng.permutation(n)] for wi in w)


def random_lambda(rng: np.random.Generator, lo_exp: float = -2.0, hi_exp: float = 1.0) -> float:
    return float(rng.choice([-1.0, 1.0]) * 10 ** rng.uniform(lo_exp, hi_exp))
