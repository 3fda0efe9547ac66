"""One randomized check per statement about D_lam and the spectral order.

Every suite is a function of a :class:`TrialContext`; it draws its instance
from ``ctx.rng``, records the serialized input and calls ``ctx.expect_*``
for each asserted relation.  Slacks within ten times the tolerance are
counted as warnings rather than failures.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from ..contractions import ContractionStep, apply_contraction, chain_decompose
from ..errors import NotHyperbolic
from ..order import (
    TOL,
    ComparisonVerdict,
    Relation,
    compare_multisets,
    compare_point_sets,
    hlp_majorize,
)
from ..polynomials import (
    Polynomial,
    combine,
    derivative,
    evaluate,
    from_roots,
    normalized_derivative,
    one_minus_lambda_d,
    pencil,
    taylor_shift,
)
from ..rootfinding import (
    EPS_HYP,
    RootMultiset,
    all_roots,
    d_lambda_root_multiset,
    d_lambda_roots,
    interlaces,
    is_hyperbolic,
    real_root_multiset,
    root_trajectory,
    root_velocity,
)
from ..serialize import jsonable
from .config import TrialConfig
from .sampling import (
    random_complex,
    random_degree,
    random_doubly_stochastic,
    random_hyperbolic,
    random_lambda,
    random_roots,
    strict_sample_roots,
)


@dataclass
class TrialContext:
    index: int
    config: TrialConfig
    rng: np.random.Generator
    input: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    warnings: int = 0
    checks: int = 0

    def fail(self, assertion: str, evidence: dict):
        self.failures.append(
            {
                "trial": self.index,
                "input": jsonable(self.input),
                "assertion": assertion,
                "evidence": jsonable(evidence),
            }
        )

    def expect(self, ok: bool, assertion: str, evidence: dict, near: bool = False) -> bool:
        """Record one assertion; ``near`` marks a miss within the warning band."""
        self.checks += 1
        if ok:
            return True
        if near:
            self.warnings += 1
            return True
        self.fail(assertion, evidence)
        return False

    def expect_le(self, verdict: ComparisonVerdict, assertion: str, extra: dict | None = None) -> bool:
        fwd = verdict.evidence["forward"]
        near = fwd["worst"] <= 10 * fwd["slack"]
        return self.expect(verdict.le, assertion, {**(extra or {}), **verdict.to_dict()}, near)

    def expect_incomparable(self, verdict: ComparisonVerdict, assertion: str, extra: dict | None = None) -> bool:
        if verdict.relation is Relation.INCOMPARABLE:
            objectives = [verdict.evidence[d]["objective"] for d in ("forward", "backward")]
            slack = verdict.evidence["forward"]["slack"]
            if min(objectives) <= 10 * slack:
                self.warnings += 1
            self.checks += 1
            return True
        return self.expect(False, assertion, {**(extra or {}), **verdict.to_dict()})


# --- instance builders ---------------------------------------------------------------


def contraction_pair(ctx: TrialContext) -> tuple[Polynomial, Polynomial, str]:
    """(P, Q) with Z(P) majorized by Z(Q).

    Half of the pairs differ by one simple non-degenerate contraction; the
    rest take P at the end of a contraction chain towards A Z(Q), A a random
    doubly stochastic matrix.
    """
    cfg, rng = ctx.config, ctx.rng
    n = random_degree(cfg, rng, 2)
    y = strict_sample_roots(n, cfg, rng)
    if rng.random() < 0.5:
        k = int(rng.integers(1, n))
        h = (y.values[k] - y.values[k - 1]) / 2
        x = apply_contraction(y, ContractionStep(k, k + 1, h * rng.uniform(1e-3, 1 - 1e-3)))
        mode = "single"
    else:
        target = RootMultiset(random_doubly_stochastic(n, rng) @ y.values)
        if target.is_strict and target != y:
            x = chain_decompose(y, target).end
        else:
            x = target
        mode = "chain"
    return from_roots(x.values), from_roots(y.values), mode


# --- suites that must never fail ----------------------------------------------------------------


def suite_orbit(ctx: TrialContext):
    cfg = ctx.config
    n = random_degree(cfg, ctx.rng, 2)
    P = from_roots(strict_sample_roots(n, cfg, ctx.rng).values)
    ctx.input = {"P": P, "lambdas": list(cfg.lambdas)}
    X = real_root_multiset(P)
    for lam in cfg.lambdas:
        Y = d_lambda_root_multiset(P, lam)
        ctx.expect_le(compare_multisets(X, Y, cfg.tol), "P <= D_lam P", {"lambda": lam})


def suite_semigroup_order(ctx: TrialContext):
    cfg = ctx.config
    P, Q, mode = contraction_pair(ctx)
    ctx.input = {"P": P, "Q": Q, "mode": mode, "lambdas": list(cfg.lambdas)}
    for lam in cfg.lambdas:
        X = real_root_multiset(one_minus_lambda_d(P, -lam))
        Y = real_root_multiset(one_minus_lambda_d(Q, -lam))
        ctx.expect_le(compare_multisets(X, Y, cfg.tol), "P + lam P' <= Q + lam Q'", {"lambda": lam})


def suite_derivative_order(ctx: TrialContext):
    cfg = ctx.config
    P, Q, mode = contraction_pair(ctx)
    ctx.input = {"P": P, "Q": Q, "mode": mode}
    X = real_root_multiset(normalized_derivative(P))
    Y = real_root_multiset(normalized_derivative(Q))
    ctx.expect_le(compare_multisets(X, Y, cfg.tol), "P'/n <= Q'/n")


def suite_global_monotone(ctx: TrialContext):
    cfg, rng = ctx.config, ctx.rng
    n = random_degree(cfg, rng, 2)
    P = from_roots(strict_sample_roots(n, cfg, rng).values)
    pairs = []
    for _ in range(cfg.lambda_pairs):
        lam2 = random_lambda(rng)
        pairs.append((lam2 * float(rng.random()), lam2))
    ctx.input = {"P": P, "pairs": pairs}
    for lam1, lam2 in pairs:
        X = d_lambda_root_multiset(P, lam1)
        Y = d_lambda_root_multiset(P, lam2)
        ctx.expect_le(
            compare_multisets(X, Y, cfg.tol),
            "D_lam1 P <= D_lam2 P",
            {"lambda1": lam1, "lambda2": lam2},
        )


def suite_convexity(ctx: TrialContext):
    cfg = ctx.config
    n = random_degree(cfg, ctx.rng, 2)
    P = from_roots(strict_sample_roots(n, cfg, ctx.rng).values)
    grid = np.linspace(-cfg.convex_span, cfg.convex_span, cfg.convex_points)
    ctx.input = {"P": P, "grid": grid}
    roots = [d_lambda_root_multiset(P, lam).values for lam in grid]
    hi = np.array([r[-1] for r in roots])
    lo = np.array([r[0] for r in roots])
    centre = int(np.argmin(np.abs(grid)))
    tol = cfg.convex_tol
    for name, f, sign in (("max", hi, 1.0), ("min", lo, -1.0), ("spread", hi - lo, 1.0)):
        g = sign * f  # convex with minimum at 0 after the sign flip
        d2 = g[:-2] - 2 * g[1:-1] + g[2:]
        worst = int(np.argmin(d2))
        ctx.expect(
            d2[worst] >= -tol,
            f"{name} Z(D_lam P) has nonnegative second differences",
            {"index": worst, "lambda": grid[worst + 1], "second_difference": d2[worst]},
            near=d2[worst] >= -10 * tol,
        )
        gap = g[centre] - g.min()
        ctx.expect(
            gap <= tol,
            f"{name} Z(D_lam P) is extremal at lambda=0",
            {"argmin_lambda": grid[int(np.argmin(g))], "excess": gap},
            near=gap <= 10 * tol,
        )


def _velocity_rhs(P: Polynomial, lam: float, xs: np.ndarray, ws: np.ndarray) -> dict:
    """Right-hand side of the root-velocity partial-sum identity, both readings.

    The denominator is read either as the derivative of D_lam(P') or as
    D_lam(P''); both are evaluated at the zeros w_j of D_lam(P').
    """
    d1 = derivative(P)
    d2 = derivative(d1)
    d3 = derivative(d2) if d2.degree >= 1 else Polynomial([0.0])
    g = combine(taylor_shift(d1, lam), taylor_shift(d2, lam), -lam)  # D_lam(P')
    den_a = evaluate(derivative(g), ws)
    den_b = evaluate(d2, ws + lam) - lam * evaluate(d3, ws + lam)
    weight = evaluate(d2, ws + lam)
    inv = 1.0 / (xs[:, None] - ws[None, :])  # [i, j]
    partial = np.cumsum(inv, axis=0)  # sum over i <= m
    return {
        "derivative_of_DP1": lam * partial @ (weight / den_a),
        "D_of_P2": lam * partial @ (weight / den_b),
    }


def suite_velocity_formula(ctx: TrialContext):
    cfg = ctx.config
    n = random_degree(cfg, ctx.rng, 2)
    r = random_roots(n, cfg, ctx.rng, strict=True, min_gap=cfg.velocity_min_gap)
    P = from_roots(r)
    ctx.input = {"zeros": r, "lambdas": list(cfg.velocity_lambdas)}
    h = cfg.velocity_h
    for lam in cfg.velocity_lambdas:
        xs = d_lambda_root_multiset(P, lam).values
        vel = np.array([root_velocity(P, lam, x) for x in xs])
        fd = (secular_zeros(r, lam + h) - secular_zeros(r, lam - h)) / (2 * h)
        err = float(np.max(np.abs(vel - fd)))
        ctx.expect(
            err <= cfg.velocity_tol,
            "closed-form root velocity matches central differences",
            {"lambda": lam, "max_abs_error": err, "velocity": vel, "finite_difference": fd},
            near=err <= 10 * cfg.velocity_tol,
        )
        sums = np.cumsum(vel)[:-1]
        if lam > 0 and sums.size:
            ctx.expect(
                bool(np.all(sums < 0)),
                "partial sums of root velocities are negative for lambda > 0",
                {"lambda": lam, "partial_sums": sums},
            )
        ws = d_lambda_root_multiset(normalized_derivative(P), lam).values
        rhs = _velocity_rhs(P, lam, xs, ws)
        errors = {k: float(np.max(np.abs(v[:-1] - np.cumsum(fd)[:-1]))) if n > 1 else 0.0 for k, v in rhs.items()}
        ctx.findings.append({"trial": ctx.index, "lambda": lam, "rhs_vs_finite_difference": errors})
        if cfg.assert_rhs:
            for k, e in errors.items():
                ctx.expect(
                    e <= cfg.velocity_tol,
                    f"partial-sum identity ({k}) matches finite differences",
                    {"lambda": lam, "max_abs_error": e},
                    near=e <= 10 * cfg.velocity_tol,
                )


def curvature_closed_form(P: Polynomial, lam: float) -> tuple[float, float]:
    """(x_n'(lam), x_n''(lam)) for the largest zero of D_lam P."""
    xs = d_lambda_root_multiset(P, lam).values
    w = real_root_multiset(normalized_derivative(P)).values
    xn = xs[-1]
    v = root_velocity(P, lam, xn)
    terms = (w - xs[:-1] - lam) / ((xn + lam - w) * (xn - xs[:-1]))
    return v, 2 * (v + 1) ** 2 * float(np.sum(terms))


def suite_curvature_formula(ctx: TrialContext):
    cfg = ctx.config
    n = random_degree(cfg, ctx.rng, 2)
    r = random_roots(n, cfg, ctx.rng, strict=True, min_gap=cfg.velocity_min_gap)
    P = from_roots(r)
    lams = sorted({0.0, *cfg.velocity_lambdas, *(-l for l in cfg.velocity_lambdas)})
    ctx.input = {"zeros": r, "lambdas": lams}
    h = cfg.curvature_h

    def top(lam):
        return secular_zeros(r, lam)[-1]

    for lam in lams:
        _, curv = curvature_closed_form(P, lam)
        fd2 = (top(lam + h) - 2 * top(lam) + top(lam - h)) / h**2
        ctx.expect(curv > 0, "x_n'' > 0", {"lambda": lam, "closed_form": curv})
        err = abs(curv - fd2)
        ctx.expect(
            err <= cfg.curvature_tol,
            "closed-form x_n'' matches second differences",
            {"lambda": lam, "closed_form": curv, "finite_difference": fd2, "abs_error": err},
            near=err <= 10 * cfg.curvature_tol,
        )


def secular_zeros(r: np.ndarray, lam: float) -> np.ndarray:
    """Zeros of D_lam P for P = prod (x - r_i), accurate to rounding level.

    With u = x + lam they solve 1 = lam * sum 1/(u - r_i): one zero between
    consecutive poles plus one beyond the last (lam > 0) or before the first
    (lam < 0) pole.  Working from the zeros of P instead of its coefficients
    keeps the noise near machine precision, which the 1/h^2 amplification
    of second differences requires.
    """
    r = np.sort(np.asarray(r, dtype=float))
    if lam == 0:
        return r.copy()
    n = r.size

    def f(u):
        return 1.0 - lam * np.sum(1.0 / (u - r))

    def inside(a, b):
        da = 1e-15 * max(1.0, abs(a))
        db = 1e-15 * max(1.0, abs(b))
        return brentq(f, a + da, b - db, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)

    reach = n * abs(lam) * (1 + 1e-9) + 1e-300
    edges = list(zip(r[:-1], r[1:]))
    edges = edges + [(r[-1], r[-1] + reach)] if lam > 0 else [(r[0] - reach, r[0])] + edges
    u = np.array([inside(a, b) for a, b in edges])
    return np.sort(u) - lam


def suite_interlace_trajectory(ctx: TrialContext):
    cfg = ctx.config
    n = random_degree(cfg, ctx.rng, 2)
    P = from_roots(strict_sample_roots(n, cfg, ctx.rng).values)
    D = normalized_derivative(P)
    half = np.linspace(0, cfg.trajectory_span, (cfg.trajectory_points + 1) // 2)
    ctx.input = {"P": P, "grid": np.concatenate([-half[:0:-1], half])}
    for grid in (half, -half):
        xt = root_trajectory(P, grid)
        wt = root_trajectory(D, grid) if D.degree >= 2 else None
        for j, lam in enumerate(grid):
            x = xt.at(j)
            w = wt.at(j) if wt is not None else d_lambda_root_multiset(D, lam).values
            left = w - x[:-1]
            right = x[1:] - w
            margin = float(min(left.min(), right.min()))
            ctx.expect(
                margin > 0,
                "x_i(lam) < w_i(lam) < x_{i+1}(lam)",
                {"lambda": lam, "x": x, "w": w, "margin": margin},
                near=margin > -10 * cfg.tol * max(1.0, float(np.sum(np.abs(x)))),
            )


def suite_obreschkoff_pencil(ctx: TrialContext):
    cfg, rng = ctx.config, ctx.rng
    n = random_degree(cfg, rng, 2)
    xp = random_roots(n, cfg, rng)
    m = n - 1 if rng.random() < 0.5 else n
    if rng.random() < 0.5:
        # zeros of Q placed in the gaps of P (one extra beyond an end when m = n)
        inner = xp[:-1] + rng.uniform(0.05, 0.95, n - 1) * np.diff(xp)
        if m == n:
            extra = xp[0] - rng.uniform(0.1, 2) if rng.random() < 0.5 else xp[-1] + rng.uniform(0.1, 2)
            inner = np.append(inner, extra)
        xq = np.sort(inner)
    else:
        xq = random_roots(m, cfg, rng)
    P, Q = from_roots(xp), from_roots(xq)
    sep = interlaces(P, Q)
    ctx.input = {"P": P, "Q": Q, "interlacing": sep}
    if sep:
        for lam in cfg.lambdas:
            R = pencil(P, Q, lam)
            ctx.expect(is_hyperbolic(R), "pencil of interlacing pair is hyperbolic", {"lambda": lam})
    else:
        lams = list(cfg.lambdas) + pencil_critical_lambdas(P, Q)
        bad = next((lam for lam in lams if not is_hyperbolic(pencil(P, Q, lam))), None)
        ctx.expect(
            bad is not None,
            "pencil of non-interlacing pair leaves the hyperbolic set",
            {"tried": lams},
        )


def pencil_critical_lambdas(P: Polynomial, Q: Polynomial, rel: tuple = (1e-3, 1e-6)) -> list[float]:
    """Parameters just past the critical values of lam(x) = -P(x)/Q(x).

    The pencil loses a pair of real zeros exactly when lam crosses a local
    extremum of this rational function.
    """
    W = combine(
        Polynomial(np.convolve(derivative(P).coeffs, Q.coeffs)),
        Polynomial(np.convolve(P.coeffs, derivative(Q).coeffs)),
        -1.0,
    )
    c = W.coeffs
    nz = np.nonzero(np.abs(c) > 1e-14 * np.max(np.abs(c)))[0]
    if nz.size < 2:
        return []
    W = Polynomial(c[: nz[-1] + 1] / c[nz[-1]])
    out = []
    for z in all_roots(W).values:
        if abs(z.imag) > 1e-6 * (1 + abs(z)):
            continue
        qv = evaluate(Q, z.real)
        if abs(qv) < 1e-12:
            continue
        lc = -evaluate(P, z.real) / qv
        for r in rel:
            out.extend([lc * (1 + r), lc * (1 - r), lc + r, lc - r])
    return out


# --- counterexamples and conjecture --------------------------------------------------


def zn_cells(cfg: TrialConfig) -> list[tuple[int, complex]]:
    units = (1.0, 1j, np.exp(1j * np.pi / 4))
    return [(n, s * u) for n in cfg.zn_degrees for s in cfg.zn_scales for u in units]


def suite_counterexample_zn(ctx: TrialContext):
    cfg = ctx.config
    cells = zn_cells(cfg)
    n, lam = cells[ctx.index % len(cells)]
    c = np.zeros(n + 1, dtype=complex)
    c[0], c[-1] = -1, 1
    P = Polynomial(c)
    ctx.input = {"P": P, "lambda": complex(lam)}
    verdict = compare_point_sets(all_roots(P), d_lambda_roots(P, lam), cfg.tol)
    ctx.expect_incomparable(verdict, "z^n - 1 and D_lam(z^n - 1) are incomparable")


def suite_counterexample_complex_lambda(ctx: TrialContext):
    cfg = ctx.config
    n = random_degree(cfg, ctx.rng, 2)
    P = from_roots(strict_sample_roots(n, cfg, ctx.rng).values)
    ctx.input = {"P": P, "lambdas": [complex(l) for l in cfg.complex_lambdas]}
    X = all_roots(P)
    for lam in cfg.complex_lambdas:
        verdict = compare_point_sets(X, d_lambda_roots(P, lam), cfg.tol)
        ctx.expect_incomparable(verdict, "P and D_lam P are incomparable for non-real lam", {"lambda": complex(lam)})


def _numpy_real_parts_le(P: Polynomial, lam: float, tol: float) -> bool:
    """Independent recheck: numpy composition and companion eigenvalues."""
    npoly = np.polynomial.Polynomial
    p = npoly(np.asarray(P.coeffs))
    shifted = p(npoly([lam, 1.0]))
    d = shifted - lam * p.deriv()(npoly([lam, 1.0]))
    x = np.roots(np.asarray(P.coeffs)[::-1]).real
    y = np.roots(d.coef[::-1]).real
    return hlp_majorize(x, y, tol).holds


def suite_conjecture1(ctx: TrialContext):
    cfg, rng = ctx.config, ctx.rng
    n = random_degree(cfg, rng, 2)
    family = cfg.complex_family
    if family == "both":
        family = "roots" if ctx.index % 2 == 0 else "coeffs"
    P = random_complex(n, cfg, rng, family)
    lam = random_lambda(rng)
    ctx.input = {"P": P, "lambda": lam, "family": family}
    x = all_roots(P).values.real
    y = d_lambda_roots(P, lam).values.real
    verdict = compare_multisets(x, y, cfg.tol)
    ctx.checks += 1
    if verdict.le:
        return
    fwd = verdict.evidence["forward"]
    if fwd["worst"] <= 10 * fwd["slack"]:
        ctx.warnings += 1
        return
    ctx.findings.append(
        {
            "trial": ctx.index,
            "input": jsonable(ctx.input),
            "verdict": jsonable(verdict.to_dict()),
            "reverified": not _numpy_real_parts_le(P, lam, cfg.tol),
        }
    )


# --- local minimum falsification -----------------------------------------------------


@dataclass
class LocalViolation:
    lam: float
    reason: str  # "not_hyperbolic" or "not_majorized"
    verdict: dict | None = None

    def to_dict(self) -> dict:
        return {"lambda": self.lam, "reason": self.reason, "verdict": self.verdict}


def dyadic_ladder(depth: int = 20) -> list[float]:
    """+-2^-j for j = 0..depth, smallest magnitude first."""
    out = []
    for j in range(depth, -1, -1):
        out.extend([2.0**-j, -(2.0**-j)])
    return out


def shifted_pencil(P: Polynomial, Q: Polynomial, lam: float) -> Polynomial:
    """R_lam(x) = P(x + lam) - lam * Q(x + lam)."""
    return combine(taylor_shift(P, lam), taylor_shift(Q, lam), -lam)


def falsify_local(
    P: Polynomial,
    Q: Polynomial,
    ladder=None,
    tol: float = TOL,
    eps_hyp: float = EPS_HYP,
) -> LocalViolation | None:
    """Smallest |lam| on the ladder where R_lam leaves the hyperbolic set or R_0 <= R_lam fails.

    Both polynomials are first moved so that the zeros of P have mean 0.
    The order is translation invariant, and far from the origin the
    monomial coefficients are so large that rounding them alone moves the
    zeros by more than the O(lam^2) margins probed near lam = 0.
    """
    c = -P.coeffs[-2] / P.degree
    Pc, Qc = taylor_shift(P, c), taylor_shift(Q, c)
    X = real_root_multiset(Pc, eps_hyp)
    if not X.is_strict:
        raise NotHyperbolic("P must have simple real zeros")
    if ladder is None:
        ladder = dyadic_ladder()
    for lam in sorted(ladder, key=lambda l: (abs(l), l < 0)):
        # zeros of R_lam are those of P - lam Q moved by -lam; no shift by lam needed
        try:
            Y = RootMultiset(real_root_multiset(combine(Pc, Qc, -lam), eps_hyp).values - lam)
        except NotHyperbolic:
            return LocalViolation(float(lam), "not_hyperbolic")
        verdict = compare_multisets(X, Y, tol)
        if not verdict.le:
            return LocalViolation(float(lam), "not_majorized", jsonable(verdict.to_dict()))
    return None


def recheck_local_violation(P: Polynomial, Q: Polynomial, v: LocalViolation, tol: float = TOL) -> bool:
    """Confirm a violation through numpy's composition and companion-matrix roots."""
    npoly = np.polynomial.Polynomial
    p, q = npoly(np.asarray(P.coeffs)), npoly(np.asarray(Q.coeffs))
    move = npoly([-P.coeffs[-2] / P.degree, 1.0])  # centre the zeros of P at 0
    p, q = p(move), q(move)
    y = (p - v.lam * q).roots() - v.lam
    x = np.sort(p.roots().real)
    if v.reason == "not_hyperbolic":
        return bool(np.any(np.abs(y.imag) > EPS_HYP * (1 + np.abs(y))))
    return not hlp_majorize(x, np.sort(y.real), tol).holds


def suite_local_falsify(ctx: TrialContext):
    cfg, rng = ctx.config, ctx.rng
    n = random_degree(cfg, rng, 2)
    P = random_hyperbolic(n, cfg.with_(strict=True), rng)
    E = Polynomial(rng.standard_normal(n))  # degree <= n-1
    ladder = dyadic_ladder(cfg.ladder_depth)
    ctx.input = {"P": P, "E": E, "deltas": list(cfg.local_deltas)}
    for delta in cfg.local_deltas:
        Q = combine(derivative(P), E, delta)
        v = falsify_local(P, Q, ladder, cfg.tol)
        if delta == 0:
            ctx.expect(v is None, "no violation when Q = P'", {"delta": delta, "violation": v})
            continue
        # a miss is recorded rather than failed: detection is a rate, not a certainty
        ctx.findings.append(
            {"trial": ctx.index, "delta": delta, "violation": None if v is None else jsonable(v.to_dict())}
        )
        if v is not None:
            ctx.expect(
                recheck_local_violation(P, Q, v, cfg.tol),
                "violation re-verifies independently",
                {"delta": delta, "violation": v},
            )


@dataclass(frozen=True)
class Suite:
    run: Callable[[TrialContext], None]
    statement: str
    finding_only: bool = False
    cells: Callable[[TrialConfig], int] | None = None


SUITES: dict[str, Suite] = {
    "semigroup_order": Suite(suite_semigroup_order, "P <= Q implies P + lam P' <= Q + lam Q'"),
    "derivative_order": Suite(suite_derivative_order, "P <= Q implies P'/n <= Q'/n"),
    "orbit": Suite(suite_orbit, "P <= D_lam P for real lam"),
    "global_monotone": Suite(suite_global_monotone, "D_lam1 P <= D_lam2 P for lam1 lam2 >= 0, |lam1| <= |lam2|"),
    "convexity": Suite(suite_convexity, "max Z(D_lam P) convex, min Z concave, spread convex, extremal at 0"),
    "local_falsify": Suite(suite_local_falsify, "local minimum along P(x+lam) - lam Q(x+lam) forces Q = P'"),
    "velocity_formula": Suite(suite_velocity_formula, "root velocities: closed form, partial-sum identity and sign"),
    "curvature_formula": Suite(suite_curvature_formula, "closed form of x_n'' and its positivity"),
    "interlace_trajectory": Suite(suite_interlace_trajectory, "x_i(lam) < w_i(lam) < x_{i+1}(lam)"),
    "obreschkoff_pencil": Suite(suite_obreschkoff_pencil, "P + lam Q hyperbolic for all lam iff zeros interlace"),
    "counterexample_zn": Suite(
        suite_counterexample_zn,
        "z^n - 1 and D_lam(z^n - 1) incomparable for small complex lam",
        cells=lambda cfg: len(zn_cells(cfg)),
    ),
    "counterexample_complex_lambda": Suite(
        suite_counterexample_complex_lambda, "P and D_lam P incomparable for small non-real lam"
    ),
    "conjecture1": Suite(suite_conjecture1, "Re Z(P) <= Re Z(D_lam P) for complex P, real lam", finding_only=True),
}
