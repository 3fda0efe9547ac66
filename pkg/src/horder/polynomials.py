"""Monic polynomials and the differential operators acting on them.

Coefficients are stored in ascending degree order.  The operators are

* ``Shift(mu)``            p(x) -> p(x + mu)
* ``OneMinusLambdaD(lam)`` p    -> p - lam * p'
* ``DLambda(lam)``         p(x) -> p(x + lam) - lam * p'(x + lam)

``DLambda`` is the composition of the other two and keeps the mean of the
zeros fixed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DegreeError, ParameterDomainError

Scalar = Union[float, complex]

MAX_DEGREE = 64


def _as_coeff_array(values) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 1 or arr.size == 0:
        raise DegreeError("coefficient sequence must be a nonempty 1-d sequence")
    if np.iscomplexobj(arr):
        arr = arr.astype(complex)
    else:
        arr = arr.astype(float)
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial with ascending coefficients.

    Real polynomials carry a float array, complex ones a complex array; the
    dtype is the "real" tag consulted by :func:`apply_operator_word`.
    Most operations require a monic input, but derivatives are not monic,
    so the class itself does not enforce it.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeff_array(self.coeffs))
        if self.coeffs.size - 1 > MAX_DEGREE:
            raise DegreeError(f"degree {self.coeffs.size - 1} exceeds cap {MAX_DEGREE}")

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.coeffs)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1]

    def __call__(self, z):
        return evaluate(self, z)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"Polynomial({self.coeffs.tolist()!r})"

    def allclose(self, other: "Polynomial", rtol: float = 1e-12, atol: float = 0.0) -> bool:
        if self.degree != other.degree:
            return False
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        return bool(np.all(np.abs(self.coeffs - other.coeffs) <= rtol * scale + atol))

    def to_complex(self) -> "Polynomial":
        return Polynomial(self.coeffs.astype(complex))


def require_monic(p: Polynomial) -> None:
    if p.degree < 1:
        raise DegreeError("degree must be at least 1")
    if not p.is_monic:
        raise DegreeError(f"polynomial is not monic (leading coefficient {p.leading!r})")


def from_roots(roots: Iterable[Scalar]) -> Polynomial:
    """Monic polynomial with the given zeros, by multiplying linear factors."""
    roots = np.asarray(list(roots))
    if roots.size == 0:
        raise DegreeError("at least one root is required")
    dtype = complex if np.iscomplexobj(roots) else float
    c = np.ones(1, dtype=dtype)
    for r in roots:
        nxt = np.zeros(c.size + 1, dtype=dtype)
        nxt[1:] = c
        nxt[:-1] -= r * c
        c = nxt
    c[-1] = 1
    return Polynomial(c)


def evaluate(p: Polynomial, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    c = p.coeffs
    acc = np.zeros_like(np.asarray(z), dtype=np.result_type(c, np.asarray(z))) + c[-1]
    for a in c[-2::-1]:
        acc = acc * z + a
    if np.ndim(acc) == 0:
        return acc[()]
    return acc


def derivative(p: Polynomial) -> Polynomial:
    if p.degree < 1:
        raise DegreeError("cannot differentiate a constant")
    k = np.arange(1, p.degree + 1)
    return Polynomial(p.coeffs[1:] * k)


def normalized_derivative(p: Polynomial) -> Polynomial:
    """The monic polynomial p'/n."""
    require_monic(p)
    if p.degree < 2:
        raise DegreeError("normalized derivative needs degree >= 2")
    c = derivative(p).coeffs / p.degree
    c = c.copy()
    c[-1] = 1
    return Polynomial(c)


def taylor_shift(p: Polynomial, a: Scalar) -> Polynomial:
    """Return q with q(x) = p(x + a), by repeated synthetic division."""
    if a == 0:
        return p
    dtype = complex if (np.iscomplexobj(p.coeffs) or isinstance(a, complex)) else float
    b = [dtype(v) for v in p.coeffs[::-1]]
    a = dtype(a)
    n = p.degree
    for i in range(n):
        for j in range(1, n + 1 - i):
            b[j] += a * b[j - 1]
    return Polynomial(np.array(b[::-1], dtype=dtype))


def combine(p: Polynomial, q: Polynomial, lam: Scalar) -> Polynomial:
    """Coefficients of p + lam*q, padded to the larger degree."""
    size = max(p.coeffs.size, q.coeffs.size)
    dtype = np.result_type(p.coeffs, q.coeffs, np.asarray(lam))
    out = np.zeros(size, dtype=dtype)
    out[: p.coeffs.size] += p.coeffs
    out[: q.coeffs.size] += lam * q.coeffs
    return Polynomial(out)


def one_minus_lambda_d(p: Polynomial, lam: Scalar) -> Polynomial:
    """p - lam*p'.  Monic inputs stay monic because deg p' < deg p."""
    require_monic(p)
    return combine(p, derivative(p), -lam)


def apply_d_lambda(p: Polynomial, lam: Scalar) -> Polynomial:
    """D_lam p (x) = p(x + lam) - lam * p'(x + lam)."""
    require_monic(p)
    if lam == 0:
        return p
    shifted = taylor_shift(p, lam)
    return one_minus_lambda_d(shifted, lam)


def pencil(p: Polynomial, q: Polynomial, lam: Scalar) -> Polynomial:
    """p + lam*q rescaled to be monic, dropping leading terms that cancel."""
    c = combine(p, q, lam).coeffs
    scale = max(float(np.max(np.abs(p.coeffs))), abs(lam) * float(np.max(np.abs(q.coeffs))), 1.0)
    nz = np.nonzero(np.abs(c) > 1e-13 * scale)[0]
    if nz.size == 0:
        raise DegreeError("pencil member vanishes identically")
    c = c[: nz[-1] + 1] / c[nz[-1]]
    c[-1] = 1
    return Polynomial(c)


# --- operator words -----------------------------------------------------------------


@dataclass(frozen=True)
class Shift:
    mu: Scalar


@dataclass(frozen=True)
class OneMinusLambdaD:
    lam: Scalar


@dataclass(frozen=True)
class DLambda:
    lam: Scalar


Factor = Union[Shift, OneMinusLambdaD, DLambda]


@dataclass(frozen=True)
class OperatorWord:
    """A product of generators, applied left factor first."""

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self):
        return len(self.factors)


def apply_operator_word(p: Polynomial, word: Union[OperatorWord, Sequence[Factor]]) -> Polynomial:
    require_monic(p)
    factors = word.factors if isinstance(word, OperatorWord) else tuple(word)
    real_tag = p.is_real
    out = p
    for f in factors:
        if isinstance(f, Shift):
            if real_tag and np.iscomplexobj(f.mu):
                raise ParameterDomainError("complex shift applied to a real polynomial")
            out = taylor_shift(out, f.mu)
        elif isinstance(f, OneMinusLambdaD):
            if real_tag and np.iscomplexobj(f.lam):
                raise ParameterDomainError("complex 1 - lam*d/dx applied to a real polynomial")
            out = one_minus_lambda_d(out, f.lam)
        elif isinstance(f, DLambda):
            out = apply_d_lambda(out, f.lam)
        else:
            raise TypeError(f"unknown operator factor {f!r}")
    return out
