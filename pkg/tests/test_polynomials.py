import numpy as np
import pytest
import sympy as sp
from hypothesis import given, strategies as st

from horder.errors import DegreeError, ParameterDomainError
from horder.polynomials import (
    DLambda,
    OneMinusLambdaD,
    OperatorWord,
    Polynomial,
    Shift,
    apply_d_lambda,
    apply_operator_word,
    combine,
    derivative,
    evaluate,
    from_roots,
    normalized_derivative,
    one_minus_lambda_d,
    pencil,
    taylor_shift,
)

from strategies import finite, lambdas, separated_roots

x = sp.symbols("x")


def sympy_coeffs(expr):
    """Ascending coefficients of a sympy expression in x, as floats."""
    return [float(c) for c in reversed(sp.Poly(sp.expand(expr), x).all_coeffs())]


def P(*c):
    return Polynomial(list(c))


class TestFromRoots:
    def test_difference_of_squares(self):
        assert from_roots([-1, 1]) == P(-1, 0, 1)

    def test_triple_zero(self):
        assert from_roots([0, 0, 0]) == P(0, 0, 0, 1)

    def test_expansion(self):
        assert from_roots([1, 2]).coeffs.tolist() == sympy_coeffs((x - 1) * (x - 2))

    def test_empty(self):
        with pytest.raises(DegreeError):
            from_roots([])

    def test_complex_roots_give_complex_tag(self):
        p = from_roots([1j, -1j])
        assert not p.is_real
        assert np.allclose(p.coeffs, [1, 0, 1])


class TestEvaluate:
    @pytest.mark.parametrize("z, expected", [(0, -1), (1, 0)])
    def test_quadratic(self, z, expected):
        assert evaluate(P(-1, 0, 1), z) == expected

    def test_cubic(self):
        expected = float((x**3 - 3 * x**2 + 2 * x).subs(x, -1))
        assert evaluate(P(0, 2, -3, 1), -1) == expected == -6

    def test_array_argument(self):
        assert evaluate(P(-1, 0, 1), np.array([0.0, 2.0])).tolist() == [-1.0, 3.0]


class TestDerivative:
    def test_examples(self):
        assert derivative(P(-1, 0, 1)) == P(0, 2)
        assert derivative(P(0, 0, 0, 1)) == P(0, 0, 3)
        assert derivative(P(2, -3, 1)) == P(-3, 2)

    def test_normalized(self):
        assert normalized_derivative(P(-1, 0, 1)) == P(0, 1)
        assert normalized_derivative(P(0, 0, 0, 1)) == P(0, 0, 1)
        q = normalized_derivative(from_roots([1, 2, 3]))
        assert np.allclose(q.coeffs, sympy_coeffs(sp.diff((x - 1) * (x - 2) * (x - 3), x) / 3), rtol=1e-14)

    def test_normalized_rejects_linear(self):
        with pytest.raises(DegreeError):
            normalized_derivative(P(3, 1))


class TestTaylorShift:
    def test_examples(self):
        assert taylor_shift(P(0, 0, 1), 1) == P(1, 2, 1)
        p = P(0.3, -2, 0, 1)
        assert taylor_shift(p, 0) == p
        assert taylor_shift(P(0, -1, 0, 1), -1).coeffs.tolist() == sympy_coeffs((x - 1) ** 3 - (x - 1))

    @given(separated_roots(1, 8), st.floats(-3, 3, **finite))
    def test_inverse(self, r, a):
        p = from_roots(r)
        assert taylor_shift(taylor_shift(p, a), -a).allclose(p, rtol=1e-12 * 10 ** p.degree)

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.integers(-3, 3))
    def test_matches_sympy(self, low, a):
        c = [*low, 1]
        expr = sum(ci * (x + a) ** i for i, ci in enumerate(c))
        assert taylor_shift(Polynomial([float(v) for v in c]), a).coeffs.tolist() == sympy_coeffs(expr)


class TestDLambda:
    def test_identity_at_zero(self):
        assert apply_d_lambda(P(-1, 0, 1), 0) == P(-1, 0, 1)

    def test_examples(self):
        assert apply_d_lambda(P(-1, 0, 1), 1) == P(-2, 0, 1)
        assert apply_d_lambda(P(0, 0, 1), 2) == P(-4, 0, 1)

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.integers(-3, 3))
    def test_against_sympy(self, low, lam):
        c = [*low, 1]
        p = sum(ci * x**i for i, ci in enumerate(c))
        expr = p.subs(x, x + lam) - lam * sp.diff(p, x).subs(x, x + lam)
        got = apply_d_lambda(Polynomial([float(v) for v in c]), lam)
        assert got.coeffs.tolist() == sympy_coeffs(expr)

    @given(separated_roots(1, 8), lambdas())
    def test_monic_degree_and_mean(self, r, lam):
        p = from_roots(r)
        q = apply_d_lambda(p, lam)
        assert q.degree == p.degree and q.is_monic
        # the x^(n-1) coefficient is c + n lam - n lam, so cancellation is bounded by n |lam|
        scale = max(1.0, abs(p.coeffs[-2]), p.degree * abs(lam))
        assert abs(q.coeffs[-2] - p.coeffs[-2]) <= 1e-12 * scale

    @given(separated_roots(1, 8), lambdas())
    def test_shift_form(self, r, lam):
        p = from_roots(r)
        alt = combine(taylor_shift(p, lam), taylor_shift(derivative(p), lam), -lam)
        assert apply_d_lambda(p, lam).allclose(alt, rtol=1e-12)


class TestOperatorWords:
    def test_empty_word(self):
        p = P(-1, 0, 1)
        assert apply_operator_word(p, OperatorWord(())) == p

    def test_one_minus_lambda_d(self):
        assert apply_operator_word(P(-1, 0, 1), [OneMinusLambdaD(1)]) == P(-1, -2, 1)
        assert one_minus_lambda_d(P(-1, 0, 1), 1) == P(-1, -2, 1)

    def test_d_lambda_pair(self):
        p = x**2 - 1
        once = sp.expand(p.subs(x, x + 1) - sp.diff(p, x).subs(x, x + 1))
        twice = once.subs(x, x - 1) + sp.diff(once, x).subs(x, x - 1)
        got = apply_operator_word(P(-1, 0, 1), [DLambda(1), DLambda(-1)])
        assert got.coeffs.tolist() == sympy_coeffs(twice) == [-3.0, 0.0, 1.0]

    def test_shift(self):
        assert apply_operator_word(P(0, 0, 1), [Shift(1)]) == P(1, 2, 1)

    def test_complex_parameter_rejected_on_real_input(self):
        with pytest.raises(ParameterDomainError):
            apply_operator_word(P(-1, 0, 1), [OneMinusLambdaD(1j)])
        with pytest.raises(ParameterDomainError):
            apply_operator_word(P(-1, 0, 1), [Shift(0.5j)])

    def test_complex_d_lambda_allowed(self):
        q = apply_operator_word(P(-1, 0, 1), [DLambda(0.1j)])
        assert q.degree == 2 and q.is_monic

    @given(separated_roots(1, 6), st.lists(st.tuples(st.sampled_from("SOD"), st.floats(-2, 2, **finite)), max_size=4))
    def test_words_preserve_shape(self, r, factors):
        make = {"S": Shift, "O": OneMinusLambdaD, "D": DLambda}
        p = from_roots(r)
        q = apply_operator_word(p, [make[k](v) for k, v in factors])
        assert q.degree == p.degree and q.is_monic


def test_pencil_normalizes():
    p, q = from_roots([1, 3]), from_roots([2])
    assert pencil(p, q, 2.0) == P(-1, -2, 1)
    r = pencil(from_roots([0, 1]), from_roots([0, 2]), 1.0)
    assert r.is_monic and r.degree == 2
