"""Zeros of polynomials: Aberth iteration, hyperbolicity tests and root dynamics.

Roots of a real-rooted polynomial are returned as a :class:`RootMultiset`
(sorted, multiplicities by repetition); roots of a general polynomial as a
:class:`PointSet2D`.  Multiple zeros come out of any floating-point solver
as tight clusters; :func:`cluster_roots` merges them back.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegreeError,
    LabelAmbiguity,
    NotHyperbolic,
    ParameterDomainError,
    RootSolveError,
    SingularVelocity,
)
from .polynomials import Polynomial, derivative, evaluate, one_minus_lambda_d, require_monic

EPS = np.finfo(float).eps

EPS_HYP = 1e-8
EPS_CLUSTER = 1e-6
ROOT_TOL = 1e-10
MAX_ITER = 200
RESTARTS = 3
MIN_STEP = 1e-12


@dataclass(frozen=True, eq=False)
class RootMultiset:
    """Real zeros sorted ascending, repeated according to multiplicity."""

    values: np.ndarray

    def __post_init__(self):
        v = np.sort(np.asarray(self.values, dtype=float).ravel())
        if v.size == 0:
            raise DegreeError("root multiset must be nonempty")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        if not isinstance(other, RootMultiset):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(np.all(self.values == other.values))

    def __repr__(self):
        return f"RootMultiset({self.values.tolist()!r})"

    @property
    def is_strict(self) -> bool:
        return bool(np.all(np.diff(self.values) > 0))

    def min_gap(self) -> float:
        if self.values.size < 2:
            return np.inf
        return float(np.min(np.diff(self.values)))


@dataclass(frozen=True, eq=False)
class PointSet2D:
    """Zeros of a complex polynomial, as points of the plane."""

    values: np.ndarray  # complex, one entry per zero

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).ravel()
        if v.size == 0:
            raise DegreeError("point set must be nonempty")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    @property
    def points(self) -> np.ndarray:
        return np.column_stack([self.values.real, self.values.imag])

    def real_parts(self) -> RootMultiset:
        return RootMultiset(self.values.real)

    @classmethod
    def from_real(cls, values) -> "PointSet2D":
        return cls(np.asarray(values, dtype=float) + 0j)


@dataclass(frozen=True)
class Trajectory:
    grid: np.ndarray  # shape (m,)
    tracks: np.ndarray  # shape (n, m); tracks[i, j] = x_{i+1}(grid[j])

    def at(self, j: int) -> np.ndarray:
        return self.tracks[:, j]


# --- Aberth-Ehrlich ------------------------------------------------------------------


def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full(z.shape, c[-1], dtype=np.result_type(c, z))
    for a in c[-2::-1]:
        acc = acc * z + a
    return acc


def _initial_guess(c: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = c.size - 1
    # Fujiwara bound; the plain Cauchy bound overflows z**n for wide root spreads
    a = np.abs(c[:-1] / c[-1])[::-1]
    k = np.arange(1, n + 1)
    terms = a ** (1.0 / k)
    terms[-1] = (a[-1] / 2) ** (1.0 / n)
    radius = 2.0 * float(np.max(terms))
    if radius == 0.0:
        radius = 1.0
    angles = 2 * np.pi * np.arange(n) / n + np.pi / (2 * n)
    jitter = 1e-3 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    return radius * np.exp(1j * angles) * (1 + jitter)


def _aberth(c: np.ndarray, z: np.ndarray, max_iter: int) -> tuple[np.ndarray, bool]:
    n = c.size - 1
    dc = c[1:] * np.arange(1, n + 1)
    abs_c = np.abs(c)
    z = z.astype(complex).copy()
    active = np.ones(n, dtype=bool)
    idx = np.arange(n)
    for _ in range(max_iter):
        ia = idx[active]
        za = z[ia]
        pv = _horner(c, za)
        # rounding-level residual bound for Horner at |z|
        bound = _horner(abs_c, np.abs(za)).real
        done = np.abs(pv) <= 4 * n * EPS * bound
        dpv = _horner(dc, za)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dpv
            diff = za[:, None] - z[None, :]
            diff[np.arange(ia.size), ia] = np.inf
            s = np.sum(1.0 / diff, axis=1)
            w = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(w)
        if np.any(bad):
            w[bad] = 1e-7 * (1 + np.abs(za[bad]))
        step_small = np.abs(w) <= 2 * EPS * np.abs(za)
        z[ia] = np.where(done, za, za - w)
        active[ia[done | step_small]] = False
        if not active.any():
            return _polish(c, dc, z), True
    return z, False


def _polish(c: np.ndarray, dc: np.ndarray, z: np.ndarray, sweeps: int = 3) -> np.ndarray:
    # residual-based freezing stops at the double-precision Horner noise
    # floor; full sweeps in extended precision recover the accuracy the
    # coefficients actually determine
    n = z.size
    cl = c.astype(np.clongdouble)
    dcl = dc.astype(np.clongdouble)
    zl = z.astype(np.clongdouble)
    best = zl
    best_res = np.abs(_horner(cl, zl))
    idx = np.arange(n)
    for _ in range(sweeps):
        pv = _horner(cl, zl)
        dpv = _horner(dcl, zl)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = pv / dpv
            diff = zl[:, None] - zl[None, :]
            diff[idx, idx] = np.inf
            s = np.sum(1.0 / diff, axis=1)
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0)
        zl = zl - w
        res = np.abs(_horner(cl, zl))
        better = res < best_res
        best = np.where(better, zl, best)
        best_res = np.where(better, res, best_res)
    return best.astype(complex)


def _scale(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    n = c.size - 1
    return float(np.max(np.abs(c))) * np.maximum(1.0, np.abs(z)) ** n


def _residual(c: np.ndarray, z: np.ndarray) -> float:
    return float(np.max(np.abs(_horner(c, z)) / _scale(c, z)))


def all_roots(p: Polynomial, tol: float = ROOT_TOL, max_iter: int = MAX_ITER) -> PointSet2D:
    """All n zeros of p (with multiplicity) as points of the plane.

    Aberth iteration from a jittered circle; falls back to companion-matrix
    eigenvalues as the starting point, then to re-jittered restarts.
    """
    if p.degree < 1:
        raise DegreeError("degree must be at least 1")
    c = np.asarray(p.coeffs)
    c = c / c[-1]
    n = c.size - 1
    if n == 1:
        return PointSet2D(np.array([-c[0]], dtype=complex))
    if np.all(c[:-1] == 0):
        return PointSet2D(np.zeros(n, dtype=complex))

    best, best_res = None, np.inf
    starts = []
    rng = np.random.default_rng(0x5EED)
    starts.append(_initial_guess(c, rng))
    for attempt in range(RESTARTS + 1):
        if attempt == 1:
            comp = np.polynomial.polynomial.polycompanion(c)
            z0 = np.linalg.eigvals(comp)
        elif attempt > 1:
            z0 = _initial_guess(c, np.random.default_rng(attempt))
        else:
            z0 = starts[0]
        z, ok = _aberth(c, z0, max_iter)
        res = _residual(c, z)
        if res < best_res:
            best, best_res = z, res
        if ok and res <= tol:
            return PointSet2D(z)
    if best_res <= tol:
        return PointSet2D(best)
    raise RootSolveError(f"root iteration did not converge (residual {best_res:.3e})", best_res)


def cluster_roots(
    p: Polynomial, roots: np.ndarray, eps_cluster: float = EPS_CLUSTER
) -> list[tuple[complex, int]]:
    """Group numerically coincident zeros; returns (mean, multiplicity) pairs.

    Two zeros belong to one cluster when their distance is at most the sum
    of their Weierstrass inclusion radii plus ``eps_cluster * max(1, |z|)``.
    """
    c = np.asarray(p.coeffs) / p.coeffs[-1]
    z = np.asarray(roots, dtype=complex)
    n = z.size
    if n == 1:
        return [(complex(z[0]), 1)]
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        radius = n * np.abs(_horner(c, z)) / np.abs(np.prod(diff, axis=1))
    radius = np.where(np.isfinite(radius), radius, np.inf)
    slack = eps_cluster * np.maximum(1.0, np.abs(z))
    dist = np.abs(z[:, None] - z[None, :])
    reach = radius[:, None] + radius[None, :] + np.maximum(slack[:, None], slack[None, :])
    adj = dist <= reach

    labels = -np.ones(n, dtype=int)
    nlab = 0
    for i in range(n):
        if labels[i] >= 0:
            continue
        stack = [i]
        labels[i] = nlab
        while stack:
            j = stack.pop()
            for k in np.nonzero(adj[j] & (labels < 0))[0]:
                labels[k] = nlab
                stack.append(k)
        nlab += 1
    out = []
    for lab in range(nlab):
        members = z[labels == lab]
        center = complex(members.mean())
        if members.size > 1:
            spread = float(np.max(np.abs(members - center)))
            center = _refine_multiple(c, center, members.size, spread)
        out.append((center, int(members.size)))
    return out


def _refine_multiple(c: np.ndarray, z0: complex, m: int, spread: float) -> complex:
    # an m-fold zero of p is a simple zero of the (m-1)-th derivative
    q = c.copy()
    for _ in range(m - 1):
        q = q[1:] * np.arange(1, q.size)
    dq = q[1:] * np.arange(1, q.size)
    if dq.size == 0:
        return z0
    z = z0
    for _ in range(50):
        dv = _horner(dq, np.array([z]))[0]
        if dv == 0:
            break
        step = _horner(q, np.array([z]))[0] / dv
        z = z - step
        if abs(z - z0) > 10 * spread + 1e-12 * max(1.0, abs(z0)):
            return z0
        if abs(step) <= 2 * EPS * max(1.0, abs(z)):
            break
    return complex(z)


def real_root_multiset(
    p: Polynomial, eps_hyp: float = EPS_HYP, eps_cluster: float = EPS_CLUSTER
) -> RootMultiset:
    """Sorted real zeros of a hyperbolic polynomial; raises NotHyperbolic otherwise."""
    if np.iscomplexobj(p.coeffs) and np.any(p.coeffs.imag != 0):
        raise NotHyperbolic("polynomial has non-real coefficients")
    pts = all_roots(p)
    values = []
    for mean, mult in cluster_roots(p, pts.values, eps_cluster):
        if abs(mean.imag) > eps_hyp * (1 + abs(mean)):
            raise NotHyperbolic(f"non-real zero {mean!r}", root=mean)
        values.extend([mean.real] * mult)
    return RootMultiset(values)


def is_hyperbolic(p: Polynomial, eps_hyp: float = EPS_HYP) -> bool:
    try:
        real_root_multiset(p, eps_hyp)
    except NotHyperbolic:
        return False
    return True


def d_lambda_roots(p: Polynomial, lam, tol: float = ROOT_TOL) -> PointSet2D:
    """Zeros of D_lam p.

    They are the zeros of p - lam*p' moved by -lam.  Solving in the frame
    of p avoids the coefficient growth of an explicit Taylor shift, which
    ruins the conditioning once |lam| is large compared to the root spread.
    """
    return PointSet2D(all_roots(one_minus_lambda_d(p, lam), tol).values - lam)


def d_lambda_root_multiset(p: Polynomial, lam: float, eps_hyp: float = EPS_HYP) -> RootMultiset:
    """Real zeros of D_lam p for real lam (see :func:`d_lambda_roots`)."""
    return RootMultiset(real_root_multiset(one_minus_lambda_d(p, lam), eps_hyp).values - lam)


def strictify(r: RootMultiset, eps: float) -> RootMultiset:
    """Perturb to simple zeros with the same sum: x_i - (n-i)eps for i < n, x_n + n(n-1)eps/2."""
    if not eps > 0:
        raise ParameterDomainError("eps must be positive")
    x = r.values
    n = x.size
    offsets = -(n - 1 - np.arange(n)) * eps
    offsets[-1] = n * (n - 1) / 2 * eps
    return RootMultiset(x + offsets)


def root_velocity(p: Polynomial, lam: float, x: float) -> float:
    """d x(lam)/d lam for the zero x of D_lam p, by implicit differentiation."""
    d1 = derivative(p)
    d2 = derivative(d1) if p.degree >= 2 else Polynomial([0.0])
    u = x + lam
    num = lam * evaluate(d2, u)
    den = evaluate(d1, u) - num
    au = max(1.0, abs(u))
    scale = float(np.sum(np.abs(d1.coeffs) * au ** np.arange(d1.coeffs.size)))
    scale += abs(lam) * float(np.sum(np.abs(d2.coeffs) * au ** np.arange(d2.coeffs.size)))
    if abs(den) < 1e-12 * scale:
        raise SingularVelocity(f"velocity denominator {den!r} vanishes at x={x!r}")
    return float(np.real(num / den))


def root_trajectory(
    p: Polynomial,
    grid: Sequence[float],
    eps_hyp: float = EPS_HYP,
    min_step: float = MIN_STEP,
) -> Trajectory:
    """Follow the labeled zeros x_i(lam) of D_lam p across ``grid``.

    Labels are carried by nearest-neighbor matching against a first-order
    prediction; a step is halved whenever the prediction error is not small
    compared with the local root gap.
    """
    require_monic(p)
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0 or grid[0] != 0:
        raise ParameterDomainError("grid must start at 0")
    start = real_root_multiset(p, eps_hyp)
    if not start.is_strict:
        raise NotHyperbolic("trajectory requires simple zeros; strictify first")
    n = p.degree
    tracks = np.empty((n, grid.size))
    cur = start.values.copy()
    tracks[:, 0] = cur
    lam = 0.0
    for j, target in enumerate(grid[1:], start=1):
        while lam != target:
            step = target - lam
            while True:
                if abs(step) < min_step:
                    raise LabelAmbiguity(f"step size fell below {min_step} near lambda={lam}")
                nxt_lam = target if abs(target - lam) <= abs(step) else lam + step
                vel = np.array([_safe_velocity(p, lam, x) for x in cur])
                pred = cur + (nxt_lam - lam) * vel
                new = d_lambda_root_multiset(p, nxt_lam, eps_hyp).values
                order = np.argmin(np.abs(pred[:, None] - new[None, :]), axis=1)
                err = np.max(np.abs(new[order] - pred))
                gap = np.min(np.diff(new)) if n > 1 else np.inf
                if np.unique(order).size == n and 4 * err < gap:
                    cur = new[order]
                    lam = nxt_lam
                    break
                step /= 2
        tracks[:, j] = cur
    return Trajectory(grid=grid, tracks=tracks)


def _safe_velocity(p, lam, x):
    try:
        return root_velocity(p, lam, x)
    except SingularVelocity:
        return 0.0


def interlaces(p: Polynomial, q: Polynomial, eps_hyp: float = EPS_HYP) -> bool:
    """True iff the zeros of p and q that are not common separate each other."""
    if q.degree not in (p.degree, p.degree - 1):
        raise DegreeError("deg q must equal deg p or deg p - 1")
    xp = list(real_root_multiset(p, eps_hyp).values)
    xq = list(real_root_multiset(q, eps_hyp).values) if q.degree >= 1 else []
    # drop common zeros with multiplicity
    rest_p, rest_q = [], []
    i = j = 0
    while i < len(xp) and j < len(xq):
        a, b = xp[i], xq[j]
        if abs(a - b) <= eps_hyp * (1 + max(abs(a), abs(b))):
            i += 1
            j += 1
        elif a < b:
            rest_p.append(a)
            i += 1
        else:
            rest_q.append(b)
            j += 1
    rest_p.extend(xp[i:])
    rest_q.extend(xq[j:])
    merged = sorted([(v, 0) for v in rest_p] + [(v, 1) for v in rest_q])
    return all(merged[k][1] != merged[k + 1][1] for k in range(len(merged) - 1))
