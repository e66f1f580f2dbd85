"""Cross-bedding cubical tori: the abstract quotient complex and its symmetric realizations.

The abstract width-k complex is the slab ``0 <= x+y+z <= k`` of the unit
cube tiling of Z³ modulo the lattice Λ = (3,-3,0)Z + (-2,-2,4)Z.  A class is
keyed by ``(layer, z mod 4, (x-y) mod 6)``; each layer has 12 classes.

Inside a layer the translation τ = (0,-1,1) generates everything modulo Λ
(the other in-layer translation (-1,1,0) is 4τ), so every class is
``b_ℓ + nτ`` for the anchor ``b_ℓ = (0,0,ℓ)`` and a unique n mod 12.  A
symmetric realization sends τ to c = r₃,₄r₁,₂ and ``b_ℓ`` to the layer seed,
so the class ``b_ℓ + nτ`` becomes ``cⁿ·seed_ℓ``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import geom
from .geom import GeometryError, clifford_lambda, dot, rank, vec
from .group import C, GroupElement, R12, R34, S_REFLECT, rot, rotation_group, symmetry_group
from .scalar import FieldElement, sign

__all__ = [
    "CCTError",
    "FixedPointViolation",
    "OrbitCollision",
    "ProjectionNotInjective",
    "AbstractCCT",
    "SymmetricCCT",
    "GroupElement",
    "class_key",
    "key_of",
    "orbit_index",
    "build_abstract",
    "enumerate_faces",
    "build_symmetric",
    "f_vector",
    "realization_space_bound",
    "control_cct",
    "ray_key",
    "CheckResult",
    "AlignmentReport",
    "IdealityCertificate",
    "check_symmetry",
    "check_transversality",
    "check_alignment",
    "check_ideal",
    "segment_interior",
    "slope_witness",
    "slope_angle",
    "slope_monotone_harness",
]

E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class CCTError(GeometryError):
    pass


class FixedPointViolation(CCTError):
    pass


class OrbitCollision(CCTError):
    pass


class ProjectionNotInjective(CCTError):
    pass


def class_key(x: int, y: int, z: int) -> tuple[int, int, int]:
    return (x + y + z, z % 4, (x - y) % 6)


def key_of(layer: int, n: int) -> tuple[int, int, int]:
    """Class of ``b_ℓ + nτ`` with ``b_ℓ = (0,0,ℓ)`` and ``τ = (0,-1,1)``."""
    return class_key(0, -n, layer + n)


def orbit_index(key: tuple[int, int, int]) -> int:
    """The n (mod 12) with ``key_of(layer, n) == key``."""
    layer, zm, dm = key
    for n in range(12):
        if n % 4 == (zm - layer) % 4 and n % 6 == dm:
            return n
    raise ValueError(f"inconsistent class key {key}")


def _representative(key) -> tuple[int, int, int]:
    layer = key[0]
    n = orbit_index(key)
    return (0, -n, layer + n)


def _shift(p, *dirs):
    x, y, z = p
    for d in dirs:
        x, y, z = x + E[d][0], y + E[d][1], z + E[d][2]
    return (x, y, z)


@dataclass(frozen=True)
class AbstractCCT:
    """The combinatorial complex 𝔗[k]; faces are frozensets of class keys."""

    width: int
    vertices: tuple
    edges: tuple
    quads: tuple
    cubes: tuple

    def layer(self, v) -> int:
        return v[0]

    def layer_vertices(self, layer: int) -> list:
        return [key_of(layer, n) for n in range(12)]

    def f_vector(self) -> tuple[int, int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.quads), len(self.cubes))

    def euler_characteristic(self) -> int:
        f = self.f_vector()
        return f[0] - f[1] + f[2] - f[3]

    def restrict(self, lo: int, hi: int) -> "AbstractCCT":
        """The subcomplex on layers ``lo..hi`` (faces with all vertices inside)."""
        keep = lambda face: all(lo <= v[0] <= hi for v in face)
        return AbstractCCT(
            hi - lo,
            tuple(v for v in self.vertices if lo <= v[0] <= hi),
            tuple(f for f in self.edges if keep(f)),
            tuple(f for f in self.quads if keep(f)),
            tuple(f for f in self.cubes if keep(f)),
        )

    @cached_property
    def cube_corners(self) -> dict:
        """Cube (frozenset) -> its min-corner class."""
        out = {}
        for layer in range(self.width - 2):
            for n in range(12):
                p = (0, -n, layer + n)
                out[frozenset(class_key(*q) for q in _cube_points(p))] = key_of(layer, n)
        return out


def _cube_points(p):
    return [_shift(p, *dirs) for r in range(4) for dirs in itertools.combinations(range(3), r)]


def cube_vertices(corner_key) -> dict:
    """Class keys of the cube with the given min corner, indexed by direction subsets."""
    p = _representative(corner_key)
    return {dirs: class_key(*_shift(p, *dirs)) for r in range(4) for dirs in itertools.combinations(range(3), r)}


def build_abstract(k: int) -> AbstractCCT:
    if k < 0:
        raise ValueError("width must be nonnegative")
    vertices = tuple(key_of(layer, n) for layer in range(k + 1) for n in range(12))
    edges, quads, cubes = [], [], []
    for layer in range(k + 1):
        for n in range(12):
            p = (0, -n, layer + n)
            if layer + 1 <= k:
                for i in range(3):
                    edges.append(frozenset((class_key(*p), class_key(*_shift(p, i)))))
            if layer + 2 <= k:
                for i, j in itertools.combinations(range(3), 2):
                    quads.append(
                        frozenset(class_key(*q) for q in (p, _shift(p, i), _shift(p, j), _shift(p, i, j)))
                    )
            if layer + 3 <= k:
                cubes.append(frozenset(class_key(*q) for q in _cube_points(p)))
    return AbstractCCT(k, vertices, tuple(edges), tuple(quads), tuple(cubes))


def enumerate_faces(k: int) -> tuple[set, set, set, set]:
    """Independent face enumeration by sweeping a box of Z³ and reducing mod Λ.

    Every class has a representative with ``0 <= z < 4`` and ``0 <= x-y < 6``
    after shifting by lattice vectors, so a box of that size plus a margin of
    one unit cube reaches every face at least once.
    """
    verts, edges, quads, cubes = set(), set(), set(), set()
    span = range(-k - 8, k + 9)
    for x in span:
        for y in span:
            for z in range(-2, 7):
                lo = x + y + z
                if not 0 <= lo <= k:
                    continue
                p = (x, y, z)
                verts.add(class_key(*p))
                for i in range(3):
                    if lo + 1 <= k:
                        edges.add(frozenset((class_key(*p), class_key(*_shift(p, i)))))
                for i, j in itertools.combinations(range(3), 2):
                    if lo + 2 <= k:
                        quads.add(frozenset(class_key(*q) for q in (p, _shift(p, i), _shift(p, j), _shift(p, i, j))))
                if lo + 3 <= k:
                    cubes.add(frozenset(class_key(*q) for q in _cube_points(p)))
    return verts, edges, quads, cubes


def f_vector(T) -> tuple[int, int, int, int]:
    """(f₀, f₁, f₂, f₃) of an abstract or symmetric CCT."""
    k = T.width
    return (12 * (k + 1), 36 * max(k, 0), 36 * max(k - 1, 0), 12 * max(k - 2, 0))


def realization_space_bound(T) -> int:
    """Vertex-count bound on the realization-space dimension of conv T.

    A CCT of width ≥ 1 is fixed by its bottom two layers (unique extension),
    so the bound is d·f₀ of that width-1 part, d = 4: 4·24 = 96.
    """
    if T.width < 1:
        raise ValueError("the bound needs width at least 1")
    return 4 * f_vector(build_abstract(1))[0]


def ray_key(v) -> tuple:
    """Hashable key identifying v up to positive scaling."""
    v = tuple(v)
    for t in reversed(v):
        s = sign(t)
        if s:
            break
    else:
        raise GeometryError("zero vector")
    scale = t if s > 0 else -t
    return tuple(x / scale for x in v)


# symmetric realizations


@dataclass(frozen=True, eq=False)
class SymmetricCCT:
    """A CCT given by one seed per layer; layer ℓ is the 𝕽-orbit of ``seeds[ℓ]``.

    ``ambient`` is ``"S4"`` (5-vectors) or ``"S3eq"`` (4-vectors on the
    equator).  ``backend`` is ``"exact"`` or ``"float"``.
    """

    seeds: tuple
    ambient: str = "S4"
    backend: str = "exact"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def width(self) -> int:
        return len(self.seeds) - 1

    @property
    def dim(self) -> int:
        return len(self.seeds[0])

    @cached_property
    def abstract(self) -> AbstractCCT:
        return build_abstract(self.width)

    def vertex(self, key) -> tuple:
        v = self._cache.get(key)
        if v is None:
            layer = key[0]
            v = rot(orbit_index(key)).apply(self.seeds[layer])
            self._cache[key] = v
        return v

    def layer_points(self, layer: int) -> list:
        return [self.vertex(key_of(layer, n)) for n in range(12)]

    def points(self) -> list:
        return [self.vertex(k) for k in self.abstract.vertices]

    def coordinates(self) -> dict:
        return {k: self.vertex(k) for k in self.abstract.vertices}

    def cube_points(self, corner_key) -> dict:
        return {d: self.vertex(k) for d, k in cube_vertices(corner_key).items()}

    def restrict(self, lo: int, hi: int) -> "SymmetricCCT":
        """Layers ``lo..hi`` re-indexed from 0 (the anchors shift with the layer)."""
        return SymmetricCCT(tuple(self.seeds[lo : hi + 1]), self.ambient, self.backend)

    def apply(self, g: GroupElement) -> "SymmetricCCT":
        """Image under g; for g in 𝕽 this is the same complex with relabeled vertices."""
        return SymmetricCCT(tuple(g.apply(s) for s in self.seeds), self.ambient, self.backend)

    def with_seed(self, layer: int, seed) -> "SymmetricCCT":
        seeds = list(self.seeds)
        seeds[layer] = vec(seed) if self.backend == "exact" else tuple(seed)
        return SymmetricCCT(tuple(seeds), self.ambient, self.backend)

    def to_json(self) -> dict:
        from .serialize import scalar_to_json

        return {
            "schema": "cct/1",
            "kind": "symmetric-cct",
            "width": self.width,
            "ambient": self.ambient,
            "backend": self.backend,
            "seeds": [[scalar_to_json(x) for x in s] for s in self.seeds],
        }


def _free_action(seed) -> bool:
    return any(sign(x) for x in seed[0:2]) and any(sign(x) for x in seed[2:4])


def build_symmetric(seeds: Sequence, ambient: str = "S4", backend: str | None = None) -> SymmetricCCT:
    """Realize 𝔗[len(seeds)-1] from one seed per layer; rejects fixed points and collisions."""
    if not seeds:
        raise ValueError("need at least one seed")
    exact = all(isinstance(x, (FieldElement, int)) or type(x).__name__ == "Fraction" for s in seeds for x in s)
    if backend is None:
        backend = "exact" if exact else "float"
    seeds = tuple(vec(s) if backend == "exact" else tuple(s) for s in seeds)
    dim = 5 if ambient == "S4" else 4
    if ambient not in ("S4", "S3eq"):
        raise ValueError(f"unknown ambient {ambient!r}")
    for s in seeds:
        if len(s) != dim:
            raise ValueError(f"seed {s} has wrong length for {ambient}")
        if not _free_action(s):
            raise FixedPointViolation(f"seed {s} is fixed by a nontrivial rotation of 𝕽")
    T = SymmetricCCT(seeds, ambient, backend)
    if backend == "exact":
        seen = {}
        for key in T.abstract.vertices:
            rk = ray_key(T.vertex(key))
            if rk in seen:
                raise OrbitCollision(f"vertices {seen[rk]} and {key} coincide")
            seen[rk] = key
    return T


def control_cct(T: SymmetricCCT) -> SymmetricCCT:
    """Project a CCT in S⁴ to the equator S³_eq (checked injective on vertices)."""
    if T.ambient != "S4":
        raise ValueError("control CCT needs an S4 complex")
    seeds = tuple(geom.project_equator(s) for s in T.seeds)
    try:
        return build_symmetric(seeds, "S3eq", T.backend)
    except OrbitCollision as exc:
        raise ProjectionNotInjective(str(exc)) from exc


# ideality predicates
#
# Window labels (relative to the base layer i of a three-layer window), as
# lattice offsets from the anchor (0,0,i):
#   v (0,0,0)   u (0,0,1)   r (0,1,0)   q (1,0,0)
#   s (0,1,1)   t (1,0,1)   p (1,1,0)
# so that u, r, q are the upper neighbours of v and the three quads of the
# star are {u,t,v,q}, {u,s,v,r}, {p,q,v,r}.

_WINDOW = {
    "v": (0, 0, 0),
    "u": (0, 0, 1),
    "r": (0, 1, 0),
    "q": (1, 0, 0),
    "s": (0, 1, 1),
    "t": (1, 0, 1),
    "p": (1, 1, 0),
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    window: int | None = None
    vertex: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.window is not None:
            out["window"] = self.window
        if self.vertex is not None:
            out["vertex"] = list(self.vertex)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class AlignmentReport:
    window: int
    conditions: dict

    @property
    def passed(self) -> bool:
        return all(self.conditions.values())

    def __getitem__(self, key):
        return self.conditions[key]


@dataclass
class IdealityCertificate:
    width: int
    symmetry: list
    transversality: list
    slope: list
    orientation: list

    @property
    def checks(self) -> list:
        return self.symmetry + self.transversality + self.slope + self.orientation

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "kind": "ideality",
            "width": self.width,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _same_vector(x, y) -> bool:
    if isinstance(x[0], FieldElement):
        return tuple(x) == tuple(y)
    import mpmath

    from .scalar import get_precision

    tol = mpmath.ldexp(1, -get_precision() // 2)
    return all(abs(a - b) <= tol * (1 + abs(a)) for a, b in zip(x, y))


def _reflect_key(key):
    x, y, z = _representative(key)
    return class_key(y, x, z)


def _translate_key(key, d):
    x, y, z = _representative(key)
    return class_key(x + d[0], y + d[1], z + d[2])


def check_symmetry(T: SymmetricCCT) -> list:
    """The three orbit identities: reflection in x₄, r₃,₄² and r₃,₄r₁,₂.

    The reflection swapping the lattice coordinates x and y must act as
    s^{e₄}₅; the translation (1,-1,0) as r₃,₄²; the translation (0,-1,1) as c.
    """
    rules = [
        ("symmetry.reflection", S_REFLECT, _reflect_key),
        ("symmetry.r34^2", R34 * R34, lambda k: _translate_key(k, (1, -1, 0))),
        ("symmetry.c", C, lambda k: _translate_key(k, (0, -1, 1))),
    ]
    out = []
    for name, g, move in rules:
        bad = None
        for key in T.abstract.vertices:
            if not _same_vector(g.apply(T.vertex(key)), T.vertex(move(key))):
                bad = key
                break
        out.append(CheckResult(name, bad is None, vertex=bad))
    return out


def _open_halfplane(vectors) -> bool:
    """True iff the 2-vectors lie in a common open half-plane (0 not in their hull)."""
    for a in vectors:
        if all(
            (lambda c: c > 0 or (c == 0 and sign(a[0] * b[0] + a[1] * b[1]) > 0))(sign(a[0] * b[1] - a[1] * b[0]))
            for b in vectors
        ):
            return True
    return False


def _avoids_degenerate_tori(face_points) -> bool:
    return _open_halfplane([x[0:2] for x in face_points]) and _open_halfplane([x[2:4] for x in face_points])


def segment_interior(i: int, x, a, b) -> bool:
    """π_i(x) in the open segment [π_i(a), π_i(b)]: two of the three fiber-side tests."""
    votes = 0
    votes += geom.fiber_side(i, x, a) * geom.fiber_side(i, x, b) < 0
    votes += geom.fiber_side(i, b, a) * geom.fiber_side(i, b, x) > 0
    votes += geom.fiber_side(i, a, b) * geom.fiber_side(i, a, x) > 0
    return votes >= 2


def _window_labels(T: SymmetricCCT, base: int, n: int = 0) -> dict:
    g = rot(n)
    return {name: g.apply(T.vertex(class_key(d[0], d[1], base + d[2]))) for name, d in _WINDOW.items()}


def _star_quads(L):
    return [(L["u"], L["t"], L["v"], L["q"]), (L["u"], L["s"], L["v"], L["r"]), (L["p"], L["q"], L["v"], L["r"])]


def _inj3_conditions(L) -> dict:
    """Hypotheses (a)–(f) of the π₁-injectivity criterion for a labeled star."""
    out = {"a": all(_avoids_degenerate_tori(q) for q in _star_quads(L))}
    if not out["a"]:
        return dict(out, b=False, c=False, d=False, e=False, f=False)
    pe = geom.pi_equal
    out["b"] = pe(2, L["s"], L["r"]) and pe(2, L["p"], L["v"]) and pe(2, L["v"], L["u"]) and pe(2, L["t"], L["q"])
    out["c"] = pe(0, L["t"], L["s"]) and pe(0, L["q"], L["r"])
    out["d"] = segment_interior(2, L["p"], L["s"], L["t"])
    out["e"] = segment_interior(0, L["v"], L["u"], L["p"]) and segment_interior(0, L["r"], L["u"], L["p"])
    out["f"] = segment_interior(0, L["s"], L["u"], L["r"])
    return out


def _down_star_labelings(T: SymmetricCCT, top: int, n: int):
    """Labelings of the downward star at a top-layer vertex (v on top, u,r,q below)."""
    g = rot(n)
    w = (0, 0, top)
    dirs = (0, 1, 2)
    for order in itertools.permutations(dirs):
        iu, ir, iq = order

        def at(*ds):
            x = list(w)
            for d in ds:
                x[d] -= 1
            return g.apply(T.vertex(class_key(*x)))

        yield order, {
            "v": at(),
            "u": at(iu),
            "r": at(ir),
            "q": at(iq),
            "s": at(iu, ir),
            "t": at(iu, iq),
            "p": at(ir, iq),
        }


def _pi1_key(x):
    return (ray_key(x[0:2]), ray_key(x[2:4]))


def check_transversality(T: SymmetricCCT) -> list:
    """Transversality of a control CCT, window by window."""
    out = []
    for i in range(1, T.width):
        base = i - 1
        ok, where, note = True, None, ""
        for n in range(12):
            cond = _inj3_conditions(_window_labels(T, base, n))
            if not all(cond.values()):
                ok, where = False, key_of(base, n)
                note = "bottom star fails " + ",".join(k for k, v in cond.items() if not v)
                break
            for order, L in _down_star_labelings(T, base + 2, n):
                if all(_inj3_conditions(L).values()):
                    break
            else:
                ok, where, note = False, key_of(base + 2, n), "no labeling of the top star satisfies the criterion"
                break
        out.append(CheckResult("transversality.local", ok, window=i, vertex=where, detail=note))
        pts = [T.vertex(key_of(layer, n)) for layer in range(base, base + 3) for n in range(12)]
        if not all(_avoids_degenerate_tori([x]) for x in pts):
            out.append(CheckResult("transversality.covering", False, window=i, detail="vertex on C0 or C2"))
            continue
        keys = [_pi1_key(x) for x in pts]
        out.append(
            CheckResult(
                "transversality.covering",
                len(set(keys)) == len(keys),
                window=i,
                detail="" if len(set(keys)) == len(keys) else "two window vertices share a π₁ image",
            )
        )
    return out


def slope_data(T: SymmetricCCT):
    """(m, u, w) for the top window of a control CCT: m = s+t, w the C₀-direction of m."""
    k = T.width
    s = T.vertex(class_key(0, 0, k))
    t = T.vertex(class_key(1, -1, k))
    u = T.vertex(class_key(0, -1, k))
    m = tuple(a + b for a, b in zip(s, t))
    w = (m[0], m[1]) + tuple(0 * x for x in m[2:])
    return m, u, w


def slope_witness(T: SymmetricCCT):
    """Projected inner product whose negativity means the slope is obtuse."""
    m, u, w = slope_data(T)
    return geom.projected_inner(m, u, w)


def slope_angle(T: SymmetricCCT, bits: int | None = None):
    """The slope α(T) in radians, evaluated in the float backend."""
    import mpmath

    from .scalar import approx, get_precision

    bits = bits or get_precision()
    with mpmath.workprec(bits):
        m, u, w = (tuple(approx(x, bits) for x in v) for v in slope_data(T))
        mm = sum(x * x for x in m)

        def tangent(z):
            zm = sum(a * b for a, b in zip(z, m))
            return tuple(a - zm * b / mm for a, b in zip(z, m))

        tu, tw = tangent(u), tangent(w)
        c = sum(a * b for a, b in zip(tu, tw)) / mpmath.sqrt(sum(a * a for a in tu) * sum(a * a for a in tw))
        return mpmath.acos(max(-1, min(1, c)))


def _control(T: SymmetricCCT) -> SymmetricCCT:
    return control_cct(T) if T.ambient == "S4" else T


def check_alignment(T: SymmetricCCT, window: int = 0) -> AlignmentReport:
    """Conditions (a)–(g) of the alignment statement on layers window..window+2."""
    C3 = _control(T)
    if not 0 <= window <= C3.width - 2:
        raise ValueError("window must fit inside the complex")
    L = _window_labels(C3, window)
    seg = segment_interior
    pe = geom.pi_equal
    quads = []
    for n in range(12):
        b = (0, -n, window + n)
        for i, j in itertools.combinations(range(3), 2):
            quads.append([C3.vertex(class_key(*x)) for x in (b, _shift(b, i), _shift(b, j), _shift(b, i, j))])
    cond = {"symmetric": all(c.passed for c in check_symmetry(T.restrict(window, window + 2)))}
    cond["a"] = all(_avoids_degenerate_tori(q) for q in quads)
    cond["b"] = pe(2, L["s"], L["r"]) and pe(2, L["p"], L["v"]) and pe(2, L["v"], L["u"]) and pe(2, L["t"], L["q"])
    cond["c"] = pe(0, L["t"], L["s"]) and pe(0, L["q"], L["r"])
    s34 = L["s"][2] ** 2 + L["s"][3] ** 2
    t34 = L["t"][2] ** 2 + L["t"][3] ** 2
    mid = tuple(a + b for a, b in zip(L["s"], L["t"]))
    cond["d"] = _same_vector((s34,), (t34,)) and (sign(mid[2]) != 0 or sign(mid[3]) != 0) and pe(2, L["p"], mid)
    cond["e"] = all(seg(0, L[x], L["u"], L["p"]) for x in "vsr")
    cond["f"] = all(seg(0, L[x], L["u"], L["r"]) for x in "sv")
    cond["g"] = seg(0, L["r"], L["v"], L["p"]) and seg(0, L["r"], L["s"], L["p"])
    return AlignmentReport(window, cond)


def check_ideal(T: SymmetricCCT) -> IdealityCertificate:
    """Symmetry, transversality, obtuse slope and orientation towards C₀."""
    symmetry = check_symmetry(T)
    k = T.width
    if k < 2:
        return IdealityCertificate(k, symmetry, [], [], [])
    try:
        C3 = _control(T)
    except (GeometryError, ProjectionNotInjective) as exc:
        fail = CheckResult("control", False, detail=str(exc))
        return IdealityCertificate(k, symmetry, [fail], [], [])
    transversality = check_transversality(C3)
    try:
        val = slope_witness(C3)
        slope = [CheckResult("slope.obtuse", sign(val) < 0, window=k - 1)]
    except GeometryError as exc:
        slope = [CheckResult("slope.obtuse", False, window=k - 1, detail=str(exc))]
    lam_top = clifford_lambda(C3.seeds[k])
    lam_below = clifford_lambda(C3.seeds[k - 1])
    orientation = [CheckResult("orientation", sign(lam_below - lam_top) > 0, window=k - 1)]
    return IdealityCertificate(k, symmetry, transversality, slope, orientation)


@dataclass(frozen=True)
class SlopeStep:
    width: int
    witness: object
    obtuse: bool
    angle: object


def slope_monotone_harness(T: SymmetricCCT, steps: int, bits: int | None = None) -> list:
    """Extend ``steps`` times, recording the slope witness after each step."""
    from .extend import elementary_extension

    if T.width < 2:
        raise ValueError("slope needs width at least 2")
    out = []
    for step in range(steps + 1):
        if step:
            T = elementary_extension(T, cross_check=False)
        C3 = _control(T)
        val = slope_witness(C3)
        obtuse = sign(val) < 0
        if out and out[-1].obtuse and not obtuse:
            raise CCTError(f"slope stopped being obtuse at width {T.width}")
        out.append(SlopeStep(T.width, val, obtuse, slope_angle(C3, bits)))
    return out
