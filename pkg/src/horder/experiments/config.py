from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace

DEFAULT_LAMBDAS = (-10.0, -1.0, -0.1, -0.01, 0.0, 0.01, 0.1, 1.0, 10.0)


@dataclass(frozen=True)
class TrialConfig:
    """Knobs for one suite run.  Defaults match the acceptance scale."""

    trials: int = 100
    seed: int = 0
    degree_min: int = 3
    degree_max: int = 8
    root_bound: float = 5.0
    strict: bool = True
    min_gap: float = 1e-3
    # fraction of instances built from a repeated zero and strictified
    multiple_fraction: float = 0.1
    strictify_eps: tuple = (1e-2, 1e-3)
    lambdas: tuple = DEFAULT_LAMBDAS
    tol: float = 1e-9
    # global_monotone
    lambda_pairs: int = 10
    # convexity
    convex_points: int = 41
    convex_span: float = 2.0
    convex_tol: float = 1e-6
    # velocity_formula / curvature_formula
    velocity_lambdas: tuple = (0.1, 0.5, 1.0)
    velocity_min_gap: float = 0.1
    velocity_h: float = 1e-5
    velocity_tol: float = 1e-6
    curvature_h: float = 1e-4
    curvature_tol: float = 1e-4
    assert_rhs: bool = False
    # interlace_trajectory
    trajectory_span: float = 2.0
    trajectory_points: int = 9
    # local_falsify
    local_deltas: tuple = (0.1, 0.01, 0.0)
    ladder_depth: int = 20
    # counterexample suites
    zn_degrees: tuple = (3, 4, 5)
    zn_scales: tuple = (0.2, 0.1, 0.05)
    complex_lambdas: tuple = (0.1j, 0.05 + 0.05j)
    # conjecture1: "roots", "coeffs" or "both" (alternating by trial)
    complex_family: str = "both"

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 1 <= self.degree_min <= self.degree_max:
            raise ValueError("need 1 <= degree_min <= degree_max")
        if self.complex_family not in ("roots", "coeffs", "both"):
            raise ValueError(f"unknown complex family {self.complex_family!r}")

    def with_(self, **changes) -> "TrialConfig":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return asdict(self)
