"""JSON helpers shared by the complex, certificate and CLI layers."""

from __future__ import annotations

import mpmath

from .scalar import FieldElement, get_precision

__all__ = ["scalar_to_json", "scalar_from_json", "float_string"]


def float_string(x, bits: int | None = None) -> str:
    bits = get_precision() if bits is None else bits
    digits = max(5, int(bits * 0.30103))
    return mpmath.nstr(mpmath.mpf(x), digits, strip_zeros=False)


def scalar_to_json(x):
    if isinstance(x, FieldElement):
        return x.to_json()
    return float_string(x)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return FieldElement.from_json(obj)
    if isinstance(obj, str):
        return mpmath.mpf(obj)
    raise ValueError(f"not a scalar: {obj!r}")
