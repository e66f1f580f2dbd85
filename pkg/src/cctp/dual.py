"""Polar duals of CCTs in convex position and reciprocal diagrams in S³_eq.

The facets of a width-k CCT are indexed by their min corners, which form
the lattice classes of layers 0..k-3; two facets share a quadrilateral
exactly when their corners differ by a unit vector.  The polar dual is
therefore again a symmetric CCT, of width k-3, whose seeds are the outer
normals of the facets over the layer anchors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from . import geom
from .cct import (
    CCTError,
    SymmetricCCT,
    _representative,
    _shift,
    build_symmetric,
    class_key,
    control_cct,
    cube_vertices,
    key_of,
)
from .convex import ConvexityCertificate, _facet_normal, check_convex_position, reference_point
from .geom import GeometryError, dot, nullspace, projected_inner, rank, span, meet
from .scalar import sign

__all__ = [
    "DualError",
    "MissingCertificate",
    "NotReciprocal",
    "NotOrientationPreserving",
    "DualComplex",
    "ReciprocityReport",
    "build_polar_dual",
    "dual_from_complex",
    "reciprocal_subspaces",
    "check_reciprocal",
    "reciprocity_extension_harness",
]


class DualError(CCTError):
    pass


class MissingCertificate(DualError):
    pass


class NotReciprocal(DualError):
    pass


class NotOrientationPreserving(DualError):
    pass


def _quad_of(a, b) -> frozenset:
    """Shared quadrilateral of the facets with min corners a and b = a + e_l."""
    pa, pb = _representative(a), _representative(b)
    for l in range(3):
        if class_key(*_shift(pa, l)) == b:
            base = _shift(pa, l)
            i, j = (d for d in range(3) if d != l)
            return frozenset(class_key(*x) for x in (base, _shift(base, i), _shift(base, j), _shift(base, i, j)))
    raise DualError(f"facets {a} and {b} are not adjacent")


@dataclass
class DualComplex:
    """Dual vertices keyed by primal facet corner; DL sends a dual edge to a primal quad."""

    vertices: dict
    edges: list
    dl: dict
    width: int
    complex: SymmetricCCT | None = None
    meta: dict = field(default_factory=dict)

    def with_vertex(self, key, point) -> "DualComplex":
        verts = dict(self.vertices)
        verts[key] = tuple(point)
        return replace(self, vertices=verts, complex=None)

    def to_json(self) -> dict:
        from .serialize import scalar_to_json

        return {
            "schema": "cct/1",
            "kind": "dual-complex",
            "width": self.width,
            "vertices": {",".join(map(str, k)): [scalar_to_json(x) for x in v] for k, v in sorted(self.vertices.items())},
            "duality": [
                {"edge": [list(a), list(b)], "quad": sorted(list(k) for k in self.dl[(a, b)])} for a, b in self.edges
            ],
        }


def dual_from_complex(S: SymmetricCCT) -> DualComplex:
    """Wrap a symmetric CCT in S³_eq as a dual complex with the facet-corner labeling."""
    verts = {k: S.vertex(k) for k in S.abstract.vertices}
    edges, dl = [], {}
    for layer in range(S.width):
        for n in range(12):
            a = key_of(layer, n)
            pa = _representative(a)
            for l in range(3):
                b = class_key(*_shift(pa, l))
                edges.append((a, b))
                dl[(a, b)] = _quad_of(a, b)
    return DualComplex(verts, edges, dl, S.width, S)


def build_polar_dual(T: SymmetricCCT, certificate: ConvexityCertificate | None = None) -> DualComplex:
    """Poles of the facet hyperplanes of T, projected to S³_eq."""
    if T.ambient != "S4":
        raise ValueError("the polar dual is taken in S⁴")
    if certificate is None or not certificate.passed:
        raise MissingCertificate("a passing convex-position certificate is required")
    ref = reference_point(T.points())
    seeds = [_facet_normal(T, key_of(j, 0), ref) for j in range(T.width - 2)]
    try:
        control_cct(T)
        S = build_symmetric([geom.project_equator(n) for n in seeds], "S3eq", T.backend)
    except CCTError as exc:
        raise geom.GeometryError(f"projection not injective: {exc}") from exc
    D = dual_from_complex(S)
    D.meta["normals"] = seeds
    return D


def reciprocal_subspaces(V, W) -> tuple[bool, object]:
    """Test reciprocity of two linear subspaces (given by spanning points).

    Returns (ok, x) with x the meet point: the meet must be one ray and the
    tangent spaces at x must be orthogonal and of complementary dimension.
    """
    V = [tuple(v) for v in V]
    W = [tuple(w) for w in W]
    d = len(V[0]) - 1
    U1, U2 = span(V), span(W)
    X = meet(U1, U2)
    if X.dim != 1:
        return False, None
    if (U1.dim - 1) + (U2.dim - 1) != d:
        return False, None
    x = X.basis[0]
    for v in U1.basis:
        if rank([v, x]) < 2:
            continue
        for w in U2.basis:
            if rank([w, x]) < 2:
                continue
            if sign(projected_inner(x, v, w)) != 0:
                return False, x
    return True, x


def _normalized_gap_sign(n, a, b) -> int:
    """sign(⟨n, a/|a|⟩ − ⟨n, b/|b|⟩) without square roots."""
    al, be = dot(n, a), dot(n, b)
    sa, sb = sign(al), sign(be)
    if sa != sb:
        return (sa > sb) - (sa < sb)
    if sa == 0:
        return 0
    lhs = al * al * dot(b, b)
    rhs = be * be * dot(a, a)
    s = sign(lhs - rhs)
    return s if sa > 0 else -s


@dataclass
class ReciprocityReport:
    passed: bool
    reciprocal: bool
    orientation: bool
    edges_checked: int
    witness: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "kind": "reciprocity",
            "passed": self.passed,
            "reciprocal": self.reciprocal,
            "orientation": self.orientation,
            "edges_checked": self.edges_checked,
            "witness": None if self.witness is None else [list(x) for x in self.witness],
            "detail": self.detail,
        }


def check_reciprocal(C: SymmetricCCT, D: DualComplex, raise_on_fail: bool = False) -> ReciprocityReport:
    """Edge-wise reciprocity and orientation preservation of D against C (both in S³_eq)."""
    if C.ambient == "S4":
        C = control_cct(C)
    if C.width - 3 != D.width:
        raise DualError("dual width does not match the primal facets")
    recip, orient, witness, detail = True, True, None, ""
    for a, b in D.edges:
        quad = D.dl[(a, b)]
        qpts = [C.vertex(k) for k in quad]
        ok, _ = reciprocal_subspaces([D.vertices[a], D.vertices[b]], qpts)
        if not ok:
            recip = False
            witness = witness or (a, b)
            detail = detail or "edge span and quad span are not reciprocal"
            continue
        # normal of the quad directed towards the facet DL(a)
        (n,) = nullspace(qpts, 4)
        far = [C.vertex(k) for k in cube_vertices(a).values() if k not in quad]
        s = sign(dot(n, far[0]))
        if s == 0:
            recip = False
            witness = witness or (a, b)
            continue
        if s < 0:
            n = tuple(-x for x in n)
        if _normalized_gap_sign(n, D.vertices[a], D.vertices[b]) <= 0:
            orient = False
            witness = witness or (a, b)
            detail = detail or "dual edge is not orientation preserving"
    report = ReciprocityReport(recip and orient, recip, orient, len(D.edges), witness, detail)
    if raise_on_fail and not report.passed:
        cls = NotReciprocal if not recip else NotOrientationPreserving
        raise cls(f"{detail} at dual edge {witness}")
    return report


def reciprocity_extension_harness(T: SymmetricCCT, S: DualComplex, steps: int) -> list:
    """Extend a control CCT and its reciprocal independently, re-checking after each step."""
    from .extend import elementary_extension

    C = control_cct(T) if T.ambient == "S4" else T
    if C.width < 5:
        raise ValueError("the primal must have width at least 5")
    reports = [check_reciprocal(C, S)]
    if not reports[0].passed:
        return reports
    if S.complex is None:
        raise DualError("the reciprocal must be a symmetric CCT to be extended")
    Scx = S.complex
    for _ in range(steps):
        C = elementary_extension(C, cross_check=False)
        Scx = elementary_extension(Scx, cross_check=False)
        S = dual_from_complex(Scx)
        reports.append(check_reciprocal(C, S))
        if not reports[-1].passed:
            break
    return reports
