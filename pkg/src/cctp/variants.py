"""Two further CCT families: rational coordinates, and inscribed in a sphere.

The rational family lives in Q(√3) only through the fourth coordinate of
its orbit points; the linear map Θ = diag(1, 1, 1, √3, 1) makes every
vertex rational.  The inscribed family has algebraic seeds of high degree
and is computed in the float backend; the sphere through its width-2
vertices is fitted once and then checked on every later layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .cct import CCTError, SymmetricCCT, build_symmetric, key_of
from .extend import extend_to
from .geom import nullspace, vec
from .scalar import SQRT3, FieldElement, approx, get_precision, precision, sign
from .serialize import float_string

__all__ = [
    "RationalityFailure",
    "PrecisionExhausted",
    "MembershipFailure",
    "SphereWitness",
    "THETA_Q0",
    "THETA_Q1",
    "theta_map",
    "build_rational",
    "rational_coordinates",
    "inscribed_parameters",
    "inscribed_x_cardano",
    "build_inscribed",
    "fit_sphere",
    "check_quadric_propagation",
    "kappa",
]

THETA_Q0 = vec(Fraction(1, 3), Fraction(-1, 3), 2, 0, 1)
THETA_Q1 = vec(1, 0, Fraction(3, 5), 0, 1)


class RationalityFailure(CCTError):
    pass


class PrecisionExhausted(CCTError):
    pass


class MembershipFailure(CCTError):
    def __init__(self, msg, vertex=None, residual=None):
        super().__init__(msg)
        self.vertex, self.residual = vertex, residual


def kappa(T: SymmetricCCT, k: int) -> tuple:
    """The tabulated seed κ_k = r₁,₂^{2(k mod 2)}·seed_k."""
    s = T.seeds[k]
    return tuple(-x for x in s[:2]) + tuple(s[2:]) if k % 2 else tuple(s)


# rational family


def theta_map(v) -> tuple:
    """Θ = diag(1, 1, 1, √3, 1)."""
    return tuple(x * SQRT3 if i == 3 else x for i, x in enumerate(v))


def rational_coordinates(T: SymmetricCCT) -> dict:
    """Θ-images of all vertices as Fractions; raises if any is irrational."""
    out = {}
    for key in T.abstract.vertices:
        img = theta_map(T.vertex(key))
        for x in img:
            if not x.is_rational():
                raise RationalityFailure(f"vertex {key} has irrational image coordinate {x}")
        out[key] = tuple(x.a for x in img)
    return out


def build_rational(n: int, export_rational: bool = False, certify: bool | None = None):
    """T^Q[n]; with ``export_rational`` also the rational Θ-image of its vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    T = extend_to(build_symmetric([THETA_Q0, THETA_Q1]), n, certify)
    if export_rational:
        return T, rational_coordinates(T)
    return T


# inscribed family


def inscribed_x_cardano(bits: int | None = None):
    """The same root from the complex cube-root form (real part; the imaginary part is round-off)."""
    bits = get_precision() if bits is None else bits
    with mpmath.workprec(bits):
        mpf, i = mpmath.mpf, mpmath.mpc(0, 1)
        w = -45 * i * mpmath.sqrt(566805) + 83895
        s3 = mpmath.sqrt(3)
        num = (2 * i * s3 - 2) * w ** (mpf(2) / 3) * mpf(60) ** (mpf(2) / 3) - 263 * (i * s3 + 1) * mpf(60) ** (mpf(4) / 3)
        num -= 1560 * w ** (mpf(1) / 3)
        return -(num / (3600 * w ** (mpf(1) / 3))).real


def inscribed_parameters(bits: int | None = None) -> tuple:
    """(x, y, z) of the inscribed seeds, from the real trigonometric closed form."""
    bits = get_precision() if bits is None else bits
    with mpmath.workprec(bits):
        mpf = mpmath.mpf
        t = mpmath.atan(3 * mpmath.sqrt(566805) / 5593) / 3
        c56, c23, c16 = mpmath.power(2, mpf(5) / 6), mpmath.power(2, mpf(2) / 3), mpmath.power(2, mpf(1) / 6)
        # the closed form evaluates to -x; the seeds need the positive root
        x = -c56 / 60 * (c23 * mpmath.sqrt(789) * mpmath.sin(t) - c23 * mpmath.sqrt(263) * mpmath.cos(t) - 13 * c16)
        root = mpmath.sqrt(559 - 400 * x - 100 * x * x)
        y = (24 - 20 * x) / root
        z = (319 - 100 * x * x - 200 * x) / (10 * root)
    return x, y, z


@dataclass
class SphereWitness:
    """The sphere {x ∈ S⁴ : <u, x/|x|> = c} with |u| = 1."""

    normal: tuple
    offset: object
    tolerance: object = None
    residuals: dict = field(default_factory=dict)

    def residual(self, v):
        v = [approx(x) for x in v]
        norm = mpmath.sqrt(mpmath.fsum(x * x for x in v))
        return mpmath.fsum(approx(a) * b for a, b in zip(self.normal, v)) / norm - approx(self.offset)

    def to_json(self) -> dict:
        return {
            "normal": [float_string(x) for x in self.normal],
            "offset": float_string(self.offset),
            "tolerance": None if self.tolerance is None else float_string(self.tolerance),
        }


def _unit(v):
    v = [approx(x) for x in v]
    norm = mpmath.sqrt(mpmath.fsum(x * x for x in v))
    return tuple(x / norm for x in v)


def _float_points(T: SymmetricCCT, lo: int, hi: int) -> list:
    return [(key_of(l, n), T.vertex(key_of(l, n))) for l in range(lo, hi + 1) for n in range(12)]


def fit_sphere(T: SymmetricCCT, layers=(0, 2), tol=None) -> SphereWitness:
    """Fit <u, x̂> = c through the vertices of the given layers (unit representatives).

    Five affinely independent vertices determine the sphere; the rest of the
    fitting layers must satisfy it within ``tol``.
    """
    tol = mpmath.ldexp(1, -get_precision() // 2) if tol is None else tol
    pts = [(k, _unit(v)) for k, v in _float_points(T, *layers)]
    rows, chosen = [], []
    for k, p in pts:
        cand = rows + [p + (mpmath.mpf(-1),)]
        if len(nullspace(cand, 6)) == 6 - len(cand):
            rows, chosen = cand, chosen + [k]
        if len(rows) == 5:
            break
    if len(rows) < 5:
        raise PrecisionExhausted("fitting vertices are affinely dependent")
    (sol,) = nullspace(rows, 6)
    u, c = sol[:5], sol[5]
    norm = mpmath.sqrt(mpmath.fsum(x * x for x in u))
    u, c = tuple(x / norm for x in u), c / norm
    if c < 0:
        u, c = tuple(-x for x in u), -c
    if not c < 1:
        raise PrecisionExhausted("fitted slice misses the sphere")
    W = SphereWitness(u, c, tol)
    for k, v in _float_points(T, *layers):
        r = W.residual(v)
        W.residuals[k] = r
        if abs(r) > tol:
            raise PrecisionExhausted(f"fitting vertex {k} is off the fitted sphere by {mpmath.nstr(r, 5)}")
    return W


def check_quadric_propagation(T: SymmetricCCT, witness: SphereWitness, raise_on_fail: bool = False) -> dict:
    """Sphere membership of every vertex, with the worst residual per layer."""
    tol = witness.tolerance if witness.tolerance is not None else mpmath.ldexp(1, -get_precision() // 2)
    exact = T.backend == "exact"
    worst, failure = {}, None
    for layer in range(T.width + 1):
        for n in range(12):
            key = key_of(layer, n)
            v = T.vertex(key)
            r = witness.residual(v)
            ok = abs(r) <= tol
            if exact and isinstance(witness.normal[0], FieldElement):
                ok = sign(sum((a * b for a, b in zip(witness.normal, v)), FieldElement(0))) == 0
            worst[layer] = max(worst.get(layer, mpmath.mpf(0)), abs(r))
            if not ok and failure is None:
                failure = (key, r)
    report = {"passed": failure is None, "worst": worst, "witness": failure, "tolerance": tol}
    if raise_on_fail and failure:
        raise MembershipFailure(f"vertex {failure[0]} is off the sphere by {mpmath.nstr(failure[1], 5)}", *failure)
    return report


def build_inscribed(n: int, bits: int = 256):
    """T^in[n] in the float backend together with its sphere witness.

    The sphere is fitted on layers 0..2 and every later layer is checked
    against it within 2^(-bits/2).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if bits < 128:
        raise ValueError("precision must be at least 128 bits")
    with precision(bits):
        x, y, z = inscribed_parameters(bits)
        one, zero = mpmath.mpf(1), mpmath.mpf(0)
        s0 = (one, -one, y, zero, one)
        s1 = (mpmath.mpf(11) / 10, x, z, zero, one)
        T = extend_to(build_symmetric([s0, s1], backend="float"), n, certify=False)
        if n < 2:
            return T, None
        W = fit_sphere(T, (0, 2))
        report = check_quadric_propagation(T, W)
        if not report["passed"]:
            key, r = report["witness"]
            raise PrecisionExhausted(f"vertex {key} misses the sphere by {mpmath.nstr(r, 5)}; rerun at higher precision")
        W.residuals = report["worst"]
    return T, W
