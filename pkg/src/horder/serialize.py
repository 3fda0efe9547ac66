"""JSON text formats for polynomials, scalars and reports.

Polynomials are written as ``{"coeffs": [c0, ..., 1]}`` (ascending, monic)
or read from ``{"roots": [...]}``; complex scalars are ``[re, im]`` pairs.
Floats go through ``repr`` so every value survives a round trip exactly.
"""
from __future__ import annotations

import json
import math
from enum import Enum

import numpy as np

from .polynomials import Polynomial, from_roots


def scalar_from_json(v):
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ValueError(f"complex scalar must be [re, im], got {v!r}")
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"not a number: {v!r}")
    return float(v)


def scalar_to_json(z, force_complex: bool = False):
    if isinstance(z, (complex, np.complexfloating)):
        z = complex(z)
        if force_complex or z.imag != 0:
            return [z.real, z.imag]
        return z.real
    if force_complex:
        return [float(z), 0.0]
    return float(z)


def polynomial_to_json(p: Polynomial) -> dict:
    if p.is_real:
        return {"coeffs": [float(c) for c in p.coeffs]}
    return {"coeffs": [[float(c.real), float(c.imag)] for c in p.coeffs]}


def polynomial_from_json(obj) -> Polynomial:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ValueError("polynomial must be a JSON object with 'coeffs' or 'roots'")
    if ("coeffs" in obj) == ("roots" in obj):
        raise ValueError("polynomial needs exactly one of 'coeffs' or 'roots'")
    key = "coeffs" if "coeffs" in obj else "roots"
    raw = obj[key]
    if not isinstance(raw, list) or not raw:
        raise ValueError(f"'{key}' must be a nonempty list")
    vals = [scalar_from_json(v) for v in raw]
    is_complex = any(isinstance(v, (list, tuple)) for v in raw)
    arr = np.array(vals, dtype=complex if is_complex else float)
    if key == "roots":
        return from_roots(arr)
    if len(arr) < 2:
        raise ValueError("coefficient list must describe degree >= 1")
    if arr[-1] != 1:
        raise ValueError(f"polynomial must be monic (last coefficient {raw[-1]!r})")
    return Polynomial(arr)


def jsonable(obj):
    """Recursively convert numpy scalars/arrays, complex numbers and enums."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Polynomial):
        return polynomial_to_json(obj)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return scalar_to_json(obj, force_complex=True)
    if isinstance(obj, (float, np.floating)):
        f = float(obj)
        if math.isnan(f) or math.isinf(f):
            return repr(f)
        return f
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    return obj


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(jsonable(obj), indent=indent)
