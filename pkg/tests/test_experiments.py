import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from horder.errors import NotHyperbolic, UnknownSuite
from horder.experiments import (
    SUITES,
    TrialConfig,
    dyadic_ladder,
    falsify_local,
    random_hyperbolic,
    run_suite,
    trial_rng,
)
from horder.experiments.runner import run_trial, thread_count
from horder.experiments.sampling import random_complex, random_doubly_stochastic, random_lambda
from horder.experiments.suites import (
    curvature_closed_form,
    pencil_critical_lambdas,
    recheck_local_violation,
    shifted_pencil,
    zn_cells,
)
from horder.order import hlp_majorize
from horder.polynomials import Polynomial, derivative, from_roots
from horder.rootfinding import d_lambda_root_multiset, is_hyperbolic, real_root_multiset
from horder.serialize import polynomial_from_json

from strategies import separated_roots

SMALL = TrialConfig(trials=4, seed=3, degree_min=3, degree_max=5)


class TestSampling:
    def test_reproducible(self):
        a = random_hyperbolic(3, TrialConfig(), trial_rng(42, 0))
        b = random_hyperbolic(3, TrialConfig(), trial_rng(42, 0))
        assert a == b

    def test_strict_gap(self):
        rng = trial_rng(0, 0)
        for _ in range(50):
            r = real_root_multiset(random_hyperbolic(6, TrialConfig(), rng))
            assert r.min_gap() >= 1e-3 * (1 - 1e-6)

    def test_linear(self):
        p = random_hyperbolic(1, TrialConfig(), trial_rng(0, 1))
        assert p.degree == 1 and p.is_monic

    def test_streams_differ_by_trial(self):
        assert trial_rng(1, 0).random() != trial_rng(1, 1).random()

    def test_complex_families(self):
        rng = trial_rng(0, 0)
        for fam in ("roots", "coeffs"):
            p = random_complex(5, TrialConfig(), rng, fam)
            assert p.degree == 5 and p.is_monic and not p.is_real

    def test_doubly_stochastic(self):
        A = random_doubly_stochastic(5, trial_rng(0, 0))
        assert np.allclose(A.sum(0), 1) and np.allclose(A.sum(1), 1) and A.min() >= 0

    def test_lambda_range(self):
        rng = trial_rng(0, 0)
        lams = np.array([random_lambda(rng) for _ in range(200)])
        assert np.all((np.abs(lams) >= 0.01) & (np.abs(lams) <= 10))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            TrialConfig(trials=-1)
        with pytest.raises(ValueError):
            TrialConfig(degree_min=5, degree_max=3)
        with pytest.raises(ValueError):
            TrialConfig(complex_family="other")


class TestRunner:
    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            run_suite("nope", SMALL)

    def test_zero_trials(self):
        r = run_suite("orbit", TrialConfig(trials=0))
        assert r.trials == 0 and r.failures == [] and r.ok

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_every_suite_runs_clean(self, name):
        r = run_suite(name, SMALL)
        assert r.failures == [] and r.errors == [], (r.failures, r.errors)
        assert r.checks > 0

    def test_report_schema(self):
        d = json.loads(run_suite("orbit", SMALL).to_json())
        assert list(d)[:3] == ["suite", "seed", "trials"]
        for key in ("failures", "findings", "warnings", "wall_ms"):
            assert key in d
        assert d["wall_ms"] == 0

    def test_timing_opt_in(self):
        assert run_suite("orbit", SMALL, timing=True).wall_ms >= 0

    def test_deterministic(self):
        a = run_suite("semigroup_order", SMALL).to_json()
        b = run_suite("semigroup_order", SMALL).to_json()
        assert a == b

    def test_workers_do_not_change_report(self):
        a = run_suite("global_monotone", SMALL, workers=1).to_json()
        b = run_suite("global_monotone", SMALL, workers=2).to_json()
        assert a == b

    def test_cell_suite_is_capped(self):
        r = run_suite("counterexample_zn", TrialConfig(trials=1000))
        assert r.trials == len(zn_cells(TrialConfig())) == 27

    def test_thread_count(self, monkeypatch):
        monkeypatch.setenv("HORDER_THREADS", "3")
        assert thread_count() == 3
        monkeypatch.setenv("HORDER_THREADS", "0")
        assert thread_count() >= 1
        monkeypatch.delenv("HORDER_THREADS")
        assert thread_count() == 1

    def test_failure_is_rerunnable(self, monkeypatch):
        """A forced failure carries enough input to reproduce the check standalone."""
        from horder.experiments import suites

        monkeypatch.setitem(
            suites.SUITES, "orbit", suites.Suite(_always_fails, "forced", cells=None)
        )
        rep = run_suite("orbit", TrialConfig(trials=2, seed=5))
        assert len(rep.failures) == 2
        f = json.loads(rep.to_json())["failures"][0]
        P = polynomial_from_json(f["input"]["P"])
        assert P.degree >= 2 and f["assertion"] == "forced"

    def test_errors_are_counted_separately(self, monkeypatch):
        from horder.experiments import suites

        monkeypatch.setitem(suites.SUITES, "orbit", suites.Suite(_raises, "boom"))
        rep = run_suite("orbit", TrialConfig(trials=3))
        assert rep.failures == [] and len(rep.errors) == 3
        assert rep.errors[0]["error"] == "NotHyperbolic"


def _always_fails(ctx):
    ctx.input = {"P": from_roots(np.sort(ctx.rng.uniform(-1, 1, 3)))}
    ctx.expect(False, "forced", {})


def _raises(ctx):
    raise NotHyperbolic("synthetic")


class TestFalsifyLocal:
    def test_derivative_gives_nothing(self):
        P = from_roots([-2, -0.5, 1, 3])
        assert falsify_local(P, derivative(P)) is None

    def test_constant_bump(self):
        P = Polynomial([-1.0, 0, 1])
        Q = Polynomial([0.1, 2.0])
        v = falsify_local(P, Q)
        assert v is not None
        assert recheck_local_violation(P, Q, v)
        # with Q = P' + c the root sum of R_lam moves by -lam * c, so the smallest rung already fails
        assert v.reason == "not_majorized" and abs(v.lam) == 2.0**-20

    def test_empty_ladder(self):
        P = Polynomial([-1.0, 0, 1])
        assert falsify_local(P, derivative(P), ladder=[]) is None

    def test_requires_simple_zeros(self):
        with pytest.raises(NotHyperbolic):
            falsify_local(from_roots([1, 1, 2]), Polynomial([0.0, 1]))
        with pytest.raises(NotHyperbolic):
            falsify_local(Polynomial([1.0, 0, 1]), Polynomial([0.0, 2]))

    def test_ladder(self):
        lad = dyadic_ladder(2)
        assert lad == [0.25, -0.25, 0.5, -0.5, 1.0, -1.0]

    def test_shifted_pencil(self):
        P = Polynomial([-1.0, 0, 1])
        assert shifted_pencil(P, derivative(P), 1.0) == Polynomial([-2.0, 0, 1])


class TestFormulas:
    @given(separated_roots(2, 7, gap=0.1), st.sampled_from([-1.0, -0.5, 0.0, 0.5, 1.0]))
    def test_curvature_matches_differences(self, r, lam):
        P, h = from_roots(r), 1e-4
        top = lambda l: d_lambda_root_multiset(P, l).values[-1]
        _, curv = curvature_closed_form(P, lam)
        fd2 = (top(lam + h) - 2 * top(lam) + top(lam - h)) / h**2
        assert curv > 0
        assert abs(curv - fd2) <= 1e-4 * max(1.0, abs(curv))

    def test_pencil_critical_values_find_escape(self):
        P, Q = from_roots([1, 2]), from_roots([5, 6])
        lams = pencil_critical_lambdas(P, Q)
        from horder.polynomials import pencil

        assert any(not is_hyperbolic(pencil(P, Q, l)) for l in lams)


def test_orbit_report_scale():
    r = run_suite("orbit", TrialConfig(trials=50, seed=1))
    assert r.failures == [] and r.checks == 50 * 9


def test_real_parts_counterexample_is_genuine():
    # a cubic emitted as a conjecture1 finding (seed 2026, trial 4920); confirmed at 50 digits
    import mpmath as mp

    from horder.order import Relation, compare_real_parts
    from horder.polynomials import apply_d_lambda

    c = [
        13.871016592560869 + 3.316630154657113j,
        12.347190683875995 + 2.0505196360767224j,
        4.524570361696739 + 0.9979360379522886j,
        1.0,
    ]
    lam = 1.0000488756943604
    P = Polynomial(np.array(c))
    assert compare_real_parts(P, apply_d_lambda(P, lam)).relation == Relation.INCOMPARABLE

    mp.mp.dps = 50
    hi = [mp.mpc(z) for z in reversed(c)]
    q = [hi[0]] + [hi[i] - mp.mpf(lam) * hi[i - 1] * (4 - i) for i in range(1, 4)]
    x = sorted((mp.re(z) for z in mp.polyroots(hi, extraprec=200)), reverse=True)
    y = sorted((mp.re(z) - mp.mpf(lam) for z in mp.polyroots(q, extraprec=200)), reverse=True)
    assert x[0] - y[0] > 0.05  # the largest real part moves down: top-1 sum fails
