"""Elementary extensions of symmetric CCTs.

Two independent routes produce the next layer:

* cube completion: the missing top corner of a 3-cube is the common point
  of the spans of its three quadrilaterals through that corner;
* the closed-form seed recursion ``i(a, b)``, valid when both seeds have
  last coordinate 1 and vanishing fourth coordinate.

With the anchor convention of :mod:`cctp.cct` the recursion reads
``seed_{k+1} = r₁,₂²·i(seed_{k-1}, r₁,₂²·seed_k)``; equivalently the table
sequence ``κ_k = r₁,₂^{2(k mod 2)}·seed_k`` obeys ``κ_{k+1} = r₁,₂²·i(κ_{k-1}, κ_k)``.
"""

from __future__ import annotations

from typing import NamedTuple

import mpmath

from . import geom
from .cct import CCTError, OrbitCollision, SymmetricCCT, build_symmetric, class_key
from .geom import dot, nullspace, rank, span, sub
from .group import rot
from .scalar import ONE, SQRT2, FieldElement, get_precision, is_zero, sign

__all__ = [
    "ExtensionError",
    "DegenerateInput",
    "CoplanarQuads",
    "ZeroDenominator",
    "BadNormalization",
    "ExtensionDegenerate",
    "CertificationFailure",
    "CubeCompletionInput",
    "complete_cube",
    "mu_coefficient",
    "iterate_seed",
    "next_seed_formula",
    "next_seed_cube",
    "elementary_extension",
    "extend_to",
    "THETA0",
    "THETA1",
    "standard_cct",
]

# seeds of the standard 1-CCT CT^s[1]
THETA0 = geom.vec(SQRT2 - 1, 1 - SQRT2, 2, 0, 1)
THETA1 = geom.vec(1, 0, 1, 0, 1)

R12_SQ = rot(6)
C1 = rot(1)  # r₁,₂r₃,₄
C5 = rot(5)  # r₁,₂r₃,₄⁻¹


class ExtensionError(CCTError):
    pass


class DegenerateInput(ExtensionError):
    pass


class CoplanarQuads(DegenerateInput):
    pass


class ZeroDenominator(ExtensionError):
    pass


class BadNormalization(ExtensionError):
    pass


class ExtensionDegenerate(ExtensionError):
    pass


class CertificationFailure(ExtensionError):
    pass


def _coords(p):
    return p.coords if isinstance(p, geom.SPoint) else tuple(p)


def _is_exact(v) -> bool:
    return isinstance(v[0], FieldElement)


def _normalize(v, ambient_s4: bool, reference):
    if ambient_s4:
        if sign(v[-1]) == 0:
            raise DegenerateInput("completed vertex lies on the equator")
        last = v[-1]
        return tuple(x / last for x in v)
    if sign(dot(v, reference)) < 0:
        v = tuple(-x for x in v)
    return v


class CubeCompletionInput(NamedTuple):
    """The six known corners a₂..a₇ around a missing cube vertex a₁."""

    a2: tuple
    a3: tuple
    a4: tuple
    a5: tuple
    a6: tuple
    a7: tuple


def complete_cube(*corners):
    """The corner a₁ shared by the quads {a₁a₂a₃a₄}, {a₁a₄a₅a₆}, {a₁a₂a₇a₆}.

    Takes a :class:`CubeCompletionInput` or the six points a₂..a₇.  Points in
    S⁴ (5-vectors) come back in homogeneous-last-1 form; points on the
    equator come back as the antipode facing the given six vertices.
    """
    if len(corners) == 1:
        corners = tuple(corners[0])
    if len(corners) != 6:
        raise TypeError("complete_cube needs six points a₂..a₇")
    pts = [_coords(p) for p in corners]
    if rank(pts) <= 3:
        raise CoplanarQuads("the three quadrilaterals span a common plane")
    quads = [(pts[0], pts[1], pts[2]), (pts[2], pts[3], pts[4]), (pts[0], pts[5], pts[4])]
    eqs = []
    for q in quads:
        if rank(q) != 3:
            raise DegenerateInput("a quadrilateral does not span a 2-sphere")
        eqs.extend(nullspace(q))
    sol = nullspace(eqs, len(pts[0]))
    if len(sol) != 1:
        raise DegenerateInput(f"quad spans meet in dimension {len(sol)}, expected 1")
    ref = pts[0]
    for p in pts[1:]:
        ref = tuple(x + y for x, y in zip(ref, p))
    return _normalize(sol[0], len(pts[0]) == 5, ref)


def _check_formula_input(a, b):
    tol = None if _is_exact(a) else mpmath.ldexp(1, -get_precision() // 2)
    for p in (a, b):
        if len(p) != 5:
            raise BadNormalization("the recursion needs points of S⁴")
        if not is_zero(p[3], tol):
            raise BadNormalization("fourth coordinate must vanish")
        if not is_zero(p[4] - 1, tol):
            raise BadNormalization("last coordinate must be 1")


def mu_coefficient(a, b):
    """μ(a, b) of the closed-form recursion."""
    a, b = _coords(a), _coords(b)
    _check_formula_input(a, b)
    S = a[0] * b[0] + a[1] * b[1]
    La = a[0] * a[0] + a[1] * a[1]
    Lb = b[0] * b[0] + b[1] * b[1]
    D = a[0] * b[1] - a[1] * b[0]
    # the La·Lb term is required to reproduce the quad-meet vertex exactly
    den = Lb * Lb + 4 * La * S + 2 * Lb * D + 2 * S * S + 4 * D * S + La * Lb
    if sign(den) == 0:
        raise ZeroDenominator("μ(a, b) has a vanishing denominator")
    return (S + Lb + D) * (3 * S + Lb + D) / den


def iterate_seed(a, b):
    """i(a, b) = μa + (1-μ)(r₁,₂r₃,₄b + r₁,₂r₃,₄⁻¹b)/2, before the r₁,₂² correction."""
    a, b = _coords(a), _coords(b)
    mu = mu_coefficient(a, b)
    nu = 1 - mu
    p, q = C1.apply(b), C5.apply(b)
    return tuple(mu * x + nu * (y + z) / 2 for x, y, z in zip(a, p, q))


def formula_applies(T: SymmetricCCT) -> bool:
    if T.ambient != "S4" or T.width < 1:
        return False
    try:
        for s in T.seeds[-2:]:
            _check_formula_input(s, s)
    except BadNormalization:
        return False
    return True


def next_seed_formula(T: SymmetricCCT):
    k = T.width
    a = T.seeds[k - 1]
    b = R12_SQ.apply(T.seeds[k])
    return R12_SQ.apply(iterate_seed(a, b))


def top_cube_input(T: SymmetricCCT) -> CubeCompletionInput:
    """a₂..a₇ around the missing vertex ``b_{k+1} = (0,0,k+1)`` of the next layer.

    a₂, a₄, a₆ are its layer-k neighbours and a₃, a₅, a₇ the layer-(k-1)
    vertices completing the three quadrilaterals below it.  For width ≥ 2
    these are seven vertices of a 3-cube; for width 1 the bottom corner is
    absent but the three quadrilaterals still pin the new vertex.
    """
    y = (0, 0, T.width + 1)

    def at(*dirs):
        p = list(y)
        for d in dirs:
            p[d] -= 1
        return T.vertex(class_key(*p))

    return CubeCompletionInput(at(0), at(0, 1), at(1), at(1, 2), at(2), at(0, 2))


def next_seed_cube(T: SymmetricCCT):
    return complete_cube(top_cube_input(T))


def _agree(u, v) -> bool:
    if _is_exact(u):
        return tuple(u) == tuple(v)
    tol = mpmath.ldexp(1, -get_precision() // 2)
    return all(abs(x - y) <= tol * (1 + abs(x)) for x, y in zip(u, v))


def elementary_extension(T: SymmetricCCT, certify: bool = False, cross_check: bool = True) -> SymmetricCCT:
    """The width-(k+1) CCT extending T.

    The new seed comes from cube completion; when the recursion's
    normalization holds it is cross-checked against the closed form.  With ``certify`` the input must pass
    :func:`cctp.cct.check_ideal` and so must the output.
    """
    k = T.width
    if k < 1:
        raise ExtensionDegenerate("a 0-CCT has no edges to extend from")
    if certify:
        from .cct import check_ideal

        if k >= 2 and not check_ideal(T).passed:
            raise ExtensionDegenerate("input CCT is not ideal")
    try:
        seed = next_seed_cube(T)
    except DegenerateInput as exc:
        raise ExtensionDegenerate(str(exc)) from exc
    if cross_check and formula_applies(T):
        if not _agree(seed, next_seed_formula(T)):
            raise CertificationFailure("cube completion and the closed form disagree")
    try:
        out = build_symmetric(T.seeds + (tuple(seed),), T.ambient, T.backend)
    except (OrbitCollision, CCTError) as exc:
        raise ExtensionDegenerate(str(exc)) from exc
    if certify and k + 1 >= 3:
        from .cct import check_ideal

        cert = check_ideal(out)
        if not cert.passed and k >= 3:
            raise CertificationFailure(f"extension of an ideal CCT is not ideal: {cert.failures()}")
    return out


def extend_to(T: SymmetricCCT, n: int, certify: bool | None = None) -> SymmetricCCT:
    """Iterate elementary extensions up to width n (certification on by default for n ≤ 20)."""
    if n < T.width:
        raise ValueError("target width is smaller than the current width")
    if certify is None:
        certify = n <= 20
    while T.width < n:
        T = elementary_extension(T, certify=certify)
    return T


def standard_cct(n: int = 1, certify: bool | None = None) -> SymmetricCCT:
    """CT^s[n]: the extension of the standard 1-CCT to width n."""
    if n < 1:
        raise ValueError("width must be at least 1")
    return extend_to(build_symmetric([THETA0, THETA1]), n, certify)
