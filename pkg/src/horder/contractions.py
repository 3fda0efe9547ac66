"""Contractions of root multisets and chains realizing a majorization.

A contraction of type (k, l) with coefficient t moves the k-th and l-th
smallest zeros towards each other by t (1-based positions).  It is simple
when l = k + 1 and non-degenerate when t is strictly below half the gap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidContraction, MultipleRoots, NotMajorized, StepCapExceeded
from .order import TOL, hlp_majorize
from .rootfinding import RootMultiset

DELTA = 1e-3


@dataclass(frozen=True)
class ContractionStep:
    k: int
    l: int
    t: float

    @property
    def simple(self) -> bool:
        return self.l == self.k + 1

    def to_dict(self) -> dict:
        d = {"k": self.k, "t": self.t}
        if not self.simple:
            d["l"] = self.l
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ContractionStep":
        k = int(d["k"])
        return cls(k, int(d.get("l", k + 1)), float(d["t"]))


def _as_multiset(r) -> RootMultiset:
    return r if isinstance(r, RootMultiset) else RootMultiset(r)


def half_gap(r: RootMultiset, step: ContractionStep) -> float:
    return (r.values[step.l - 1] - r.values[step.k - 1]) / 2


def apply_contraction(r, step: ContractionStep) -> RootMultiset:
    r = _as_multiset(r)
    n = len(r)
    if not (1 <= step.k < step.l <= n):
        raise InvalidContraction(f"indices ({step.k}, {step.l}) out of range for n={n}")
    x = r.values.copy()
    xk, xl = x[step.k - 1], x[step.l - 1]
    if xk == xl:
        raise InvalidContraction("contraction of equal zeros")
    h = (xl - xk) / 2
    if not (0 < step.t <= h * (1 + 1e-12)):
        raise InvalidContraction(f"coefficient {step.t!r} outside ]0, {h!r}]")
    x[step.k - 1] = xk + step.t
    x[step.l - 1] = xl - step.t
    return RootMultiset(x)


@dataclass(frozen=True)
class ContractionChain:
    start: RootMultiset
    steps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "start", _as_multiset(self.start))
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self):
        return len(self.steps)

    def multisets(self) -> list[RootMultiset]:
        out = [self.start]
        for s in self.steps:
            out.append(apply_contraction(out[-1], s))
        return out

    @property
    def end(self) -> RootMultiset:
        return self.multisets()[-1]

    def to_dict(self) -> dict:
        return {"start": self.start.values.tolist(), "steps": [s.to_dict() for s in self.steps]}

    @classmethod
    def from_dict(cls, d: dict) -> "ContractionChain":
        return cls(RootMultiset(d["start"]), tuple(ContractionStep.from_dict(s) for s in d["steps"]))


def _step_cap(n: int, initial: float, final: float) -> int:
    ratio = max(initial / final, 2.0)
    return 16 * n * n * math.ceil(math.log2(ratio))


def chain_decompose(
    Y,
    X,
    tol: float = TOL,
    delta: float = DELTA,
    allow_degenerate: bool = False,
) -> ContractionChain:
    """Chain of simple contractions leading from Y down to X (X majorized by Y).

    Greedy: at every step pick the adjacent pair whose boundary still has
    top-sum slack and admits the largest move, then move by the smaller of
    the slack and (1 - delta) times the half-gap.  The boundary of largest
    slack always has a gap at least as wide as the corresponding gap of X,
    so the l1 discrepancy falls by a fixed amount until it is exhausted.
    """
    Y, X = _as_multiset(Y), _as_multiset(X)
    if not hlp_majorize(X, Y, tol):
        raise NotMajorized("target is not majorized by the start")
    if not allow_degenerate and not (Y.is_strict and X.is_strict):
        raise MultipleRoots("chain decomposition needs simple zeros; strictify first")
    x = X.values
    v = Y.values.copy()
    n = v.size
    scale = max(1.0, float(np.sum(np.abs(v))))
    stop = 1e-12 * scale
    tail_x = np.cumsum(x[::-1])[::-1][1:]  # tail sums starting at positions 2..n

    def slacks(vec):
        return np.cumsum(vec[::-1])[::-1][1:] - tail_x

    s = slacks(v)
    initial = float(np.sum(np.clip(s, 0, None)))
    if initial <= stop:
        return ContractionChain(Y, ())
    cap = _step_cap(n, initial, stop)
    factor = 0.5 if allow_degenerate else 0.5 * (1 - delta)
    steps = []
    while True:
        s = slacks(v)
        active = s > stop
        if not active.any():
            break
        if len(steps) >= cap:
            raise StepCapExceeded(f"no convergence within {cap} steps")
        gaps = np.diff(v)
        t = np.where(active, np.minimum(s, factor * gaps), -np.inf)
        b = int(np.flatnonzero(t == t.max())[-1])
        tb = float(t[b])
        if tb <= 0:
            raise StepCapExceeded("no admissible contraction left")
        v[b] += tb
        v[b + 1] -= tb
        steps.append(ContractionStep(b + 1, b + 2, tb))
    return ContractionChain(Y, tuple(steps))


@dataclass
class ChainCheck:
    ok: bool
    violation: str | None = None
    step: int | None = None
    endpoint_error: float = float("nan")

    def __bool__(self):
        return self.ok


def verify_chain(chain: ContractionChain, X, tol: float = TOL, allow_degenerate: bool = False) -> ChainCheck:
    """Re-apply every step and check simplicity, non-degeneracy, order and endpoint."""
    X = _as_multiset(X)
    cur = chain.start
    scale = max(1.0, float(np.sum(np.abs(cur.values))))
    for i, step in enumerate(chain.steps):
        if not step.simple:
            return ChainCheck(False, "step is not simple", i)
        if not (1 <= step.k < step.l <= len(cur)):
            return ChainCheck(False, "indices out of range", i)
        h = half_gap(cur, step)
        if not allow_degenerate and not step.t < h:
            return ChainCheck(False, "step is degenerate or exceeds the half-gap", i)
        try:
            nxt = apply_contraction(cur, step)
        except InvalidContraction as exc:
            return ChainCheck(False, f"not applicable: {exc}", i)
        if not hlp_majorize(nxt, cur, tol):
            return ChainCheck(False, "successor is not majorized by its predecessor", i)
        cur = nxt
    if len(cur) != len(X):
        return ChainCheck(False, "endpoint has the wrong size")
    err = float(np.max(np.abs(cur.values - X.values)))
    if err > tol * scale:
        return ChainCheck(False, "endpoint differs from target", endpoint_error=err)
    return ChainCheck(True, endpoint_error=err)
