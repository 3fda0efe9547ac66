"""Dense phase-1 simplex: feasibility of {x >= 0, A x = b}.

Bland's rule is used for both the entering and the leaving variable, so
the method cannot cycle; a pivot budget still guards against numerical
stalls.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SolverStall

PIVOT_TOL = 1e-11


@dataclass
class PhaseOneResult:
    objective: float  # sum of artificial variables at the optimum
    x: np.ndarray  # values of the original variables
    pivots: int

    def feasible(self, tol: float) -> bool:
        return self.objective <= tol


def phase_one(A: np.ndarray, b: np.ndarray, max_pivots: int | None = None) -> PhaseOneResult:
    """Minimize the sum of artificials for A x + a = b, x, a >= 0."""
    A = np.array(A, dtype=float)
    b = np.array(b, dtype=float)
    m, nvar = A.shape
    neg = b < 0
    A[neg] *= -1
    b[neg] *= -1

    # tableau columns: original vars, artificials, rhs
    T = np.zeros((m + 1, nvar + m + 1))
    T[:m, :nvar] = A
    T[:m, nvar : nvar + m] = np.eye(m)
    T[:m, -1] = b
    # reduced costs of the phase-1 objective with artificials basic
    T[m, :nvar] = -A.sum(axis=0)
    T[m, -1] = -b.sum()
    basis = list(range(nvar, nvar + m))

    if max_pivots is None:
        max_pivots = 50 * (m + nvar)
    scale = max(1.0, float(np.max(np.abs(A))) if A.size else 1.0)
    tol = PIVOT_TOL * scale

    pivots = 0
    while True:
        cost = T[m, : nvar + m]
        candidates = np.nonzero(cost < -tol)[0]
        if candidates.size == 0:
            break
        col = int(candidates[0])
        column = T[:m, col]
        rows = np.nonzero(column > tol)[0]
        if rows.size == 0:
            # cannot happen for a bounded phase-1 problem; treat as stall
            raise SolverStall("unbounded direction in phase-1 problem")
        ratios = T[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-14 * max(1.0, abs(best))]
        row = int(min(ties, key=lambda r: basis[r]))
        T[row] /= T[row, col]
        others = np.arange(m + 1) != row
        T[others] -= np.outer(T[others, col], T[row])
        basis[row] = col
        pivots += 1
        if pivots > max_pivots:
            raise SolverStall(f"no optimum after {max_pivots} pivots")

    x = np.zeros(nvar + m)
    for r, var in enumerate(basis):
        x[var] = T[r, -1]
    x = np.maximum(x, 0.0)
    objective = float(x[nvar:].sum())
    return PhaseOneResult(objective=objective, x=x[:nvar], pivots=pivots)
