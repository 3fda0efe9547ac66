import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from horder.order import Relation
from horder.polynomials import Polynomial, from_roots
from horder.serialize import dumps, jsonable, polynomial_from_json, polynomial_to_json, scalar_from_json

from strategies import finite


@given(st.lists(st.floats(-1e6, 1e6, **finite), min_size=1, max_size=10))
def test_real_round_trip_is_exact(low):
    p = Polynomial([*low, 1.0])
    q = polynomial_from_json(json.loads(dumps(polynomial_to_json(p))))
    assert q == p and q.is_real


@given(st.lists(st.complex_numbers(max_magnitude=1e3, **finite), min_size=1, max_size=6))
def test_complex_round_trip_is_exact(low):
    p = Polynomial(np.array([*low, 1], dtype=complex))
    q = polynomial_from_json(dumps(polynomial_to_json(p)))
    assert q == p and not q.is_real


def test_roots_form():
    assert polynomial_from_json({"roots": [1, 3]}) == from_roots([1, 3])
    assert polynomial_from_json({"roots": [[0, 1], [0, -1]]}).coeffs.tolist() == [1, 0, 1]


@pytest.mark.parametrize(
    "obj",
    [
        {"coeffs": [1, 2]},
        {"coeffs": [1]},
        {"coeffs": []},
        {"coeffs": [1, 1], "roots": [1]},
        {},
        [1, 2],
        {"coeffs": ["a", 1]},
        {"roots": [[1, 2, 3]]},
    ],
)
def test_rejects_malformed(obj):
    with pytest.raises(ValueError):
        polynomial_from_json(obj)


def test_scalar():
    assert scalar_from_json([1, 2]) == 1 + 2j
    assert scalar_from_json(3) == 3.0
    with pytest.raises(ValueError):
        scalar_from_json(True)


def test_jsonable():
    out = jsonable({"a": np.float64(0.1), "b": np.arange(2), "c": 1j, "d": Relation.LESS, "e": math.inf})
    assert out == {"a": 0.1, "b": [0, 1], "c": [0.0, 1.0], "d": "Less", "e": "inf"}
    json.dumps(out)
