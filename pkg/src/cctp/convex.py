"""Convex-position certificates for symmetric CCTs in S⁴.

Every facet of a CCT is a geometric 3-cube whose eight vertices span a
hyperplane.  A certificate records, per facet, the outer normal and the
sign of every tested vertex against it; interior means strictly negative.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import geom
from .cct import (
    CCTError,
    SymmetricCCT,
    _representative,
    _shift,
    class_key,
    cube_vertices,
    key_of,
)
from .geom import Hemisphere, dot, nullspace, rank
from .scalar import sign
from .serialize import scalar_to_json

__all__ = [
    "ConvexityError",
    "RankDeficient",
    "NotCoplanar",
    "NotInConvexPosition",
    "NotLocallyConvex",
    "LocalHypothesisFails",
    "GlobalConclusionFails",
    "ConvexityCertificate",
    "FacetRecord",
    "facet_hyperplane",
    "facets",
    "reference_point",
    "check_convex_position",
    "check_local_convex_position",
    "check_width3_criterion",
    "check_avh_hypotheses",
]


class ConvexityError(CCTError):
    pass


class RankDeficient(ConvexityError):
    pass


class NotCoplanar(ConvexityError):
    pass


class NotInConvexPosition(ConvexityError):
    def __init__(self, msg, facet=None, vertex=None):
        super().__init__(msg)
        self.facet, self.vertex = facet, vertex


class NotLocallyConvex(NotInConvexPosition):
    pass


class LocalHypothesisFails(NotInConvexPosition):
    pass


class GlobalConclusionFails(NotInConvexPosition):
    pass


@dataclass
class FacetRecord:
    corner: tuple
    normal: tuple
    signs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "corner": list(self.corner),
            "normal": [scalar_to_json(x) for x in self.normal],
            "signs": {",".join(map(str, k)): v for k, v in sorted(self.signs.items())},
        }


@dataclass
class ConvexityCertificate:
    mode: str
    passed: bool
    facets: list
    witness: tuple | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": "convexity",
            "mode": self.mode,
            "passed": self.passed,
            "witness": None if self.witness is None else [list(x) if x else None for x in self.witness],
            "notes": self.notes,
            "facets": [f.to_json() for f in self.facets],
        }


def reference_point(points) -> tuple:
    """The vertex-sum direction, used to orient outer normals."""
    pts = list(points)
    ref = pts[0]
    for p in pts[1:]:
        ref = tuple(a + b for a, b in zip(ref, p))
    return ref


def facet_hyperplane(cube, reference=None) -> Hemisphere:
    """Outer normal of the hyperplane through the eight cube vertices.

    With ``reference`` the normal is oriented so the reference gets the
    negative side; it must not lie on the hyperplane.
    """
    pts = [tuple(p.coords if isinstance(p, geom.SPoint) else p) for p in cube]
    r = rank(pts)
    dim = len(pts[0])
    if r < dim - 1:
        raise RankDeficient(f"cube vertices span rank {r}")
    if r == dim:
        raise NotCoplanar("cube vertices admit no common hyperplane")
    (n,) = nullspace(pts, dim)
    if reference is not None:
        s = sign(dot(n, reference))
        if s == 0:
            raise ConvexityError("reference point lies on a facet hyperplane")
        if s > 0:
            n = tuple(-x for x in n)
    return Hemisphere(n)


def facets(T: SymmetricCCT) -> list:
    """Min-corner keys of all facets, in canonical (layer, orbit) order."""
    return [key_of(layer, n) for layer in range(T.width - 2) for n in range(12)]


def _facet_keys(corner) -> frozenset:
    return frozenset(cube_vertices(corner).values())


def _facet_normal(T, corner, ref):
    pts = [T.vertex(k) for k in cube_vertices(corner).values()]
    return facet_hyperplane(pts, ref).normal


def _guard(T: SymmetricCCT):
    if T.ambient != "S4":
        raise ValueError("convex position is certified in S⁴")
    if T.width < 3:
        raise ValueError("width at least 3 is needed for facets to exist")


def _certify_reference(T, ref):
    if all(sign(x) == 0 for x in ref):
        raise ConvexityError("vertex sum vanishes")


def check_convex_position(T: SymmetricCCT, orbit_shortcut: bool = False, raise_on_fail: bool = False) -> ConvexityCertificate:
    """Brute certificate: each facet hyperplane has all other vertices strictly inside.

    With ``orbit_shortcut`` only the layer seeds' facets are tested; the rest
    follow by 𝕽-covariance of normals and the vertex set.
    """
    _guard(T)
    verts = T.abstract.vertices
    ref = reference_point(T.vertex(k) for k in verts)
    _certify_reference(T, ref)
    corners = facets(T)
    if orbit_shortcut:
        corners = [c for c in corners if c == key_of(c[0], 0)]
    records, witness = [], None
    for corner in corners:
        normal = _facet_normal(T, corner, ref)
        inside = _facet_keys(corner)
        rec = FacetRecord(corner, normal)
        for key in verts:
            s = sign(dot(normal, T.vertex(key)))
            rec.signs[key] = s
            if (key in inside and s != 0) or (key not in inside and s >= 0):
                witness = witness or (corner, key)
        records.append(rec)
    cert = ConvexityCertificate("brute", witness is None, records, witness, {"orbit_shortcut": orbit_shortcut})
    if raise_on_fail and witness:
        raise NotInConvexPosition(f"facet {witness[0]} fails at vertex {witness[1]}", *witness)
    return cert


def _star_index(T) -> dict:
    idx = {}
    for corner in facets(T):
        for key in _facet_keys(corner):
            idx.setdefault(key, []).append(corner)
    return idx


def check_local_convex_position(T: SymmetricCCT, raise_on_fail: bool = False) -> ConvexityCertificate:
    """Every vertex star is in convex position, tested against its own vertices only."""
    _guard(T)
    ref = reference_point(T.vertex(k) for k in T.abstract.vertices)
    _certify_reference(T, ref)
    normals = {c: _facet_normal(T, c, ref) for c in facets(T)}
    records, witness = [], None
    for key, star in _star_index(T).items():
        star_keys = set().union(*(_facet_keys(c) for c in star))
        for corner in star:
            inside = _facet_keys(corner)
            rec = FacetRecord(corner, normals[corner])
            for other in star_keys:
                s = sign(dot(normals[corner], T.vertex(other)))
                rec.signs[other] = s
                if (other in inside and s != 0) or (other not in inside and s >= 0):
                    witness = witness or (corner, other)
            records.append(rec)
    cert = ConvexityCertificate("local", witness is None, records, witness)
    if raise_on_fail and witness:
        raise NotLocallyConvex(f"star of a vertex fails at facet {witness[0]}, vertex {witness[1]}", *witness)
    return cert


def _edge_neighbours(key, width) -> set:
    x, y, z = _representative(key)
    out = set()
    for d in range(3):
        for s in (1, -1):
            p = [x, y, z]
            p[d] += s
            if 0 <= sum(p) <= width:
                out.add(class_key(*p))
    return out


def _dihedral_diagnostics(T: SymmetricCCT) -> dict:
    """At each layer-(k-2) seed: the star is in convex position and the tangent
    of [v, π₀(v)] points into the cone over its link (sign tests in S³_eq)."""
    from .cct import _control

    C3 = _control(T)
    k = C3.width
    out = {}
    for layer in range(k - 2, k - 1):
        v = C3.vertex(key_of(layer, 0))
        base = _representative(key_of(layer, 0))
        up = [C3.vertex(class_key(*_shift(base, d))) for d in range(3)]
        diag = [C3.vertex(class_key(*_shift(base, *ij))) for ij in itertools.combinations(range(3), 2)]
        # tangent of [v, π₀(v)] at v, and tangents towards the three edges
        w = (v[0], v[1]) + tuple(0 * x for x in v[2:])
        vv = dot(v, v)

        def tangent(z):
            zv = dot(z, v)
            return tuple(a * vv - zv * b for a, b in zip(z, v))

        tw, te = tangent(w), [tangent(z) for z in up]
        # convex position of the star: for each quad plane through v the
        # remaining star vertices lie strictly on one side
        faces_ok = True
        pairs = list(itertools.combinations(range(3), 2))
        for (i, j), d in zip(pairs, diag):
            plane = nullspace([v, up[i], up[j], d], 4)
            if len(plane) != 1:
                faces_ok = False
                continue
            (n,) = plane
            rest = [up[o] for o in range(3) if o not in (i, j)] + [e for pq, e in zip(pairs, diag) if pq != (i, j)]
            signs = {sign(dot(n, x)) for x in rest}
            if len(signs) != 1 or 0 in signs:
                faces_ok = False
        out["star_convex"] = faces_ok
        # π₀ tangent inside the cone spanned by the three edge tangents
        M = [list(te[0]), list(te[1]), list(te[2]), list(v)]
        try:
            coeffs = _solve(M, tw)
            out["tangent_in_link_cone"] = all(sign(c) > 0 for c in coeffs[:3])
        except ConvexityError:
            out["tangent_in_link_cone"] = False
    return out


def _solve(rows, target):
    """Coefficients c with Σ cᵢ rowsᵢ = target (square system)."""
    n = len(rows)
    aug = [tuple(rows[i][j] for i in range(n)) + (target[j],) for j in range(len(target))]
    sol = nullspace(aug, n + 1)
    for s in sol:
        if sign(s[-1]) != 0:
            return tuple(-x / s[-1] for x in s[:-1])
    raise ConvexityError("singular system")


def check_width3_criterion(T: SymmetricCCT, raise_on_fail: bool = False) -> dict:
    """Local hypothesis and global conclusion of the width-3 convexity criterion."""
    _guard(T)
    if T.width != 3:
        raise ValueError("the criterion applies to width-3 complexes")
    ref = reference_point(T.vertex(k) for k in T.abstract.vertices)
    local_ok, global_ok = True, True
    local_wit = global_wit = None
    for corner in facets(T):
        normal = _facet_normal(T, corner, ref)
        inside = _facet_keys(corner)
        near = set().union(*(_edge_neighbours(k, 3) for k in inside)) - inside
        for key in near:
            if key[0] == 1 and sign(dot(normal, T.vertex(key))) >= 0:
                local_ok, local_wit = False, local_wit or (corner, key)
        for key in T.abstract.vertices:
            if key not in inside and sign(dot(normal, T.vertex(key))) >= 0:
                global_ok, global_wit = False, global_wit or (corner, key)
    report = {
        "local": local_ok,
        "global": global_ok,
        "local_witness": local_wit,
        "global_witness": global_wit,
        "dihedral": _dihedral_diagnostics(T),
    }
    if raise_on_fail:
        if not local_ok:
            raise LocalHypothesisFails("layer-1 neighbour outside a facet hemisphere", *local_wit)
        if not global_ok:
            raise GlobalConclusionFails("vertex outside a facet hemisphere", *global_wit)
    return report


def _fattened_boundaries(T: SymmetricCCT):
    """The two fattened boundaries: the bottom and the top layers of cubes."""
    k = T.width
    return {"bottom": T.restrict(0, 3), "top": T.restrict(k - 3, k)}


def check_avh_hypotheses(T: SymmetricCCT) -> dict:
    """Hypotheses of the local-to-global theorem for manifolds with boundary.

    Each fattened boundary must be in convex position and the whole complex
    in locally convex position; the conclusion is cross-checked against the
    brute certificate.
    """
    _guard(T)
    if T.width < 5:
        raise ValueError("width at least 5 is needed for a manifold with boundary")
    fat = {name: check_convex_position(sub).passed for name, sub in _fattened_boundaries(T).items()}
    local = check_local_convex_position(T).passed
    hypotheses = all(fat.values()) and local
    brute = check_convex_position(T).passed
    return {
        "fattened": fat,
        "local": local,
        "hypotheses": hypotheses,
        "brute": brute,
        "agree": hypotheses == brute or not hypotheses,
        "passed": hypotheses and brute,
    }
