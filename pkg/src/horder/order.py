"""Spectral (majorization) order on real multisets and planar point sets.

Real multisets are compared with the partial-sum criterion; planar point
sets by feasibility of ``X = A Y`` over doubly stochastic ``A``, decided by a
phase-1 simplex.  All slack is relative: ``tol * scale`` with
``scale = max(1, sum |y|)`` taken from the larger side of the comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence, Union

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DimensionError, NotDoublyStochastic, NotMajorized
from .polynomials import Polynomial
from .rootfinding import PointSet2D, RootMultiset, all_roots, real_root_multiset
from .simplex import phase_one

TOL = 1e-9

ArrayLike = Union[RootMultiset, Sequence[float], np.ndarray]


def _values(x) -> np.ndarray:
    if isinstance(x, RootMultiset):
        return x.values
    return np.sort(np.asarray(x, dtype=float).ravel())


def _points(x) -> np.ndarray:
    if isinstance(x, PointSet2D):
        return x.values
    arr = np.asarray(x)
    if arr.ndim == 2 and arr.shape[1] == 2 and not np.iscomplexobj(arr):
        return arr[:, 0] + 1j * arr[:, 1]
    return arr.astype(complex).ravel()


def _scale(y: np.ndarray) -> float:
    return max(1.0, float(np.sum(np.abs(y))))


class Relation(str, Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"


# --- classical majorization ----------------------------------------------------------


@dataclass
class HLPResult:
    holds: bool
    failing_index: int | None  # k of the first failing top-(k+1) sum; n-1 flags the total
    worst: float  # largest violation amount (negative when every condition has room)
    slack: float  # absolute slack tol*scale that was allowed

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "failing_index": self.failing_index,
            "worst": self.worst,
            "slack": self.slack,
        }


def hlp_majorize(X: ArrayLike, Y: ArrayLike, tol: float = TOL) -> HLPResult:
    """Decide X < Y by equal totals and dominated top-k sums."""
    x, y = _values(X), _values(Y)
    if x.size != y.size:
        raise DimensionError(f"multisets of different sizes {x.size} and {y.size}")
    n = x.size
    slack = tol * _scale(y)
    top_x = np.cumsum(x[::-1])
    top_y = np.cumsum(y[::-1])
    partial = top_x[: n - 1] - top_y[: n - 1]
    total = abs(top_x[-1] - top_y[-1])
    violations = np.append(partial, total)
    bad = np.nonzero(violations > slack)[0]
    return HLPResult(
        holds=bad.size == 0,
        failing_index=int(bad[0]) if bad.size else None,
        worst=float(violations.max()),
        slack=slack,
    )


@dataclass(frozen=True, eq=False)
class DoublyStochasticMatrix:
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError("doubly stochastic matrix must be square")
        a.flags.writeable = False
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def is_valid(self, neg_tol: float = 1e-12, sum_tol: float = 1e-9) -> bool:
        a = self.entries
        return bool(
            np.all(a >= -neg_tol)
            and np.all(np.abs(a.sum(axis=0) - 1) <= sum_tol)
            and np.all(np.abs(a.sum(axis=1) - 1) <= sum_tol)
        )

    def tolist(self):
        return self.entries.tolist()


def classical_witness(X: ArrayLike, Y: ArrayLike, tol: float = TOL) -> DoublyStochasticMatrix:
    """Doubly stochastic A with A @ sorted(Y) = sorted(X), built from T-transforms.

    Works on descending vectors: take the last coordinate j where the
    current vector exceeds x and the first later coordinate k where it
    falls short, and average the pair until one of them is fixed.
    """
    if not hlp_majorize(X, Y, tol):
        raise NotMajorized("X is not majorized by Y")
    x = _values(X)[::-1].copy()
    y = _values(Y)[::-1].copy()
    n = x.size
    scale = _scale(y)
    tiny = 1e-13 * scale
    cur = y.copy()
    A = np.eye(n)
    for _ in range(n - 1):
        d = cur - x
        above = np.nonzero(d > tiny)[0]
        if above.size == 0:
            break
        j = int(above[-1])
        below = np.nonzero(d[j + 1 :] < -tiny)[0]
        if below.size == 0:
            break
        k = j + 1 + int(below[0])
        delta = min(d[j], -d[k])
        span = cur[j] - cur[k]
        a = 1.0 - delta / span
        rj, rk = A[j].copy(), A[k].copy()
        A[j] = a * rj + (1 - a) * rk
        A[k] = a * rk + (1 - a) * rj
        if d[j] <= -d[k]:
            cur[j] = x[j]
            cur[k] = cur[k] + delta
        else:
            cur[k] = x[k]
            cur[j] = cur[j] - delta
    A = A[::-1, ::-1]
    err = np.max(np.abs(A @ _values(Y) - _values(X)))
    if err > 1e-8 * scale:
        raise NotMajorized(f"witness construction left residual {err:.3e}")
    return DoublyStochasticMatrix(A)


# --- Birkhoff decomposition ----------------------------------------------------------


def _perfect_matching(mask: np.ndarray) -> list[int] | None:
    """Row -> column perfect matching on a boolean support, by augmenting paths."""
    n = mask.shape[0]
    match_col = [-1] * n
    adj = [np.nonzero(mask[i])[0].tolist() for i in range(n)]

    def augment(i, seen):
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_col[j] < 0 or augment(match_col[j], seen):
                    match_col[j] = i
                    return True
        return False

    for i in range(n):
        if not augment(i, [False] * n):
            return None
    perm = [0] * n
    for j, i in enumerate(match_col):
        perm[i] = j
    return perm


def _bottleneck_matching(R: np.ndarray, tol: float) -> list[int] | None:
    # largest threshold that still admits a perfect matching
    levels = np.unique(R[R > tol])[::-1]
    if levels.size == 0:
        return None
    lo, hi = 0, levels.size - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        perm = _perfect_matching(R >= levels[mid])
        if perm is None:
            lo = mid + 1
        else:
            best = perm
            hi = mid - 1
    return best


def birkhoff_decompose(A, tol: float = 1e-12) -> list[tuple[float, tuple[int, ...]]]:
    """Write A as a convex combination of permutation matrices.

    Each term is ``(weight, perm)`` with ``perm[i]`` the column used by row i.
    Every step removes at least one support entry, so the number of terms
    stays within the dimension bound (n-1)**2 + 1.
    """
    a = A.entries if isinstance(A, DoublyStochasticMatrix) else np.asarray(A, dtype=float)
    R = np.where(a > tol, a, 0.0)
    n = R.shape[0]
    rows = np.arange(n)
    terms: list[tuple[float, tuple[int, ...]]] = []
    for _ in range(n * n + 1):
        if not np.any(R > tol):
            return terms
        perm = _bottleneck_matching(R, tol)
        if perm is None:
            raise NotDoublyStochastic(
                f"support admits no perfect matching with residual mass {R.sum():.3e}"
            )
        vals = R[rows, perm]
        w = float(vals.min())
        R[rows, perm] -= w
        R[rows[vals == w], np.asarray(perm)[vals == w]] = 0.0
        R[R <= tol] = 0.0
        terms.append((w, tuple(perm)))
    raise NotDoublyStochastic("decomposition did not terminate")


def permutation_matrix(perm: Sequence[int]) -> np.ndarray:
    n = len(perm)
    P = np.zeros((n, n))
    P[np.arange(n), perm] = 1.0
    return P


def reconstruct(terms) -> np.ndarray:
    return sum(w * permutation_matrix(p) for w, p in terms)


# --- planar majorization -------------------------------------------------------------


@dataclass
class MultivariateResult:
    holds: bool
    objective: float  # phase-1 artificial objective (0 when feasible)
    slack: float
    witness: DoublyStochasticMatrix | None = None
    order_x: np.ndarray | None = None  # lexicographic orderings the witness refers to
    order_y: np.ndarray | None = None

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "objective": self.objective,
            "slack": self.slack,
            "witness": None if self.witness is None else self.witness.tolist(),
        }


def _lex_order(z: np.ndarray) -> np.ndarray:
    return np.lexsort((z.imag, z.real))


def multivariate_majorize(X, Y, tol: float = TOL) -> MultivariateResult:
    """Decide X < Y for planar point sets: is there a doubly stochastic A with X = A Y?"""
    x, y = _points(X), _points(Y)
    if x.size != y.size:
        raise DimensionError(f"point sets of different sizes {x.size} and {y.size}")
    n = x.size
    ox, oy = _lex_order(x), _lex_order(y)
    x, y = x[ox], y[oy]
    nv = n * n
    rows, rhs = [], []
    for i in range(n):
        r = np.zeros(nv)
        r[i * n : (i + 1) * n] = 1
        rows.append(r)
        rhs.append(1.0)
    for j in range(n - 1):  # last column sum is implied
        r = np.zeros(nv)
        r[j::n] = 1
        rows.append(r)
        rhs.append(1.0)
    for coord_y, coord_x in ((y.real, x.real), (y.imag, x.imag)):
        for i in range(n):
            r = np.zeros(nv)
            r[i * n : (i + 1) * n] = coord_y
            rows.append(r)
            rhs.append(coord_x[i])
    res = phase_one(np.array(rows), np.array(rhs))
    slack = tol * _scale(np.abs(y))
    holds = res.feasible(slack)
    witness = DoublyStochasticMatrix(res.x.reshape(n, n)) if holds else None
    return MultivariateResult(holds, res.objective, slack, witness, ox, oy)


# --- comparisons ---------------------------------------------------------------------


@dataclass
class ComparisonVerdict:
    relation: Relation
    evidence: dict = field(default_factory=dict)
    tol: float = TOL

    @property
    def le(self) -> bool:
        """True when the first argument is below or equivalent to the second."""
        return self.relation in (Relation.LESS, Relation.EQUIVALENT)

    def to_dict(self) -> dict:
        return {"relation": self.relation.value, "tol": self.tol, "evidence": self.evidence}


def _relation(less: bool, greater: bool) -> Relation:
    if less and greater:
        return Relation.EQUIVALENT
    if less:
        return Relation.LESS
    if greater:
        return Relation.GREATER
    return Relation.INCOMPARABLE


def compare_multisets(
    X: ArrayLike, Y: ArrayLike, tol: float = TOL, with_witness: bool = False
) -> ComparisonVerdict:
    x, y = _values(X), _values(Y)
    fwd = hlp_majorize(x, y, tol)
    bwd = hlp_majorize(y, x, tol)
    rel = _relation(fwd.holds, bwd.holds)
    evidence = {"forward": fwd.to_dict(), "backward": bwd.to_dict()}
    if rel is Relation.EQUIVALENT:
        evidence["max_entry_gap"] = float(np.max(np.abs(x - y)))
    if with_witness and rel in (Relation.LESS, Relation.EQUIVALENT):
        evidence["witness"] = classical_witness(x, y, tol).tolist()
    elif with_witness and rel is Relation.GREATER:
        evidence["witness"] = classical_witness(y, x, tol).tolist()
    return ComparisonVerdict(rel, evidence, tol)


def compare_point_sets(X, Y, tol: float = TOL) -> ComparisonVerdict:
    x, y = _points(X), _points(Y)
    fwd = multivariate_majorize(x, y, tol)
    bwd = multivariate_majorize(y, x, tol)
    rel = _relation(fwd.holds, bwd.holds)
    evidence = {"forward": fwd.to_dict(), "backward": bwd.to_dict()}
    if rel is Relation.EQUIVALENT:
        cost = np.abs(x[:, None] - y[None, :])
        r, c = linear_sum_assignment(cost)
        evidence["max_entry_gap"] = float(cost[r, c].max())
    return ComparisonVerdict(rel, evidence, tol)


def _check_degrees(P: Polynomial, Q: Polynomial):
    if P.degree != Q.degree:
        raise DimensionError(f"degrees differ: {P.degree} and {Q.degree}")


def compare_hyperbolic(
    P: Polynomial, Q: Polynomial, tol: float = TOL, with_witness: bool = False
) -> ComparisonVerdict:
    """Order of two real-rooted polynomials by their zero multisets."""
    _check_degrees(P, Q)
    return compare_multisets(real_root_multiset(P), real_root_multiset(Q), tol, with_witness)


def compare_complex(P: Polynomial, Q: Polynomial, tol: float = TOL) -> ComparisonVerdict:
    """Order of two complex polynomials by their zeros viewed as planar points."""
    _check_degrees(P, Q)
    return compare_point_sets(all_roots(P), all_roots(Q), tol)


def compare_real_parts(P: Polynomial, Q: Polynomial, tol: float = TOL) -> ComparisonVerdict:
    """Classical order of the real parts of the zeros."""
    _check_degrees(P, Q)
    return compare_multisets(all_roots(P).values.real, all_roots(Q).values.real, tol)
