"""Projectively unique polytopes from CCT polytopes.

The pipeline has four stages:

* the point configuration K, built from the vertices of Δ₂×Δ₂ by exact
  meets of spans and pinned to the CCT vertex set by λ = √2-1;
* a weak projective triple (P, Q, R) with P = CT^s[n], Q its 24 layer-0
  and layer-1 vertices of CT^s[1] and R = K ∖ Q;
* the subdirect cone, a pyramid over P in S⁵ with base on a tilted
  hyperplane through the wedge hyperplane sp{∞₁..∞₄};
* the Lawrence extension, which lifts each of the 64 external points to
  two points on a fresh axis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cct import CCTError, SymmetricCCT
from .extend import THETA0, THETA1, standard_cct
from .geom import GeometryError, LinearSubspace, canonical, det, dot, meet, nullspace, same_point, span, vec
from .group import R12, R34, rot, rotation_group
from .scalar import FieldElement, ONE, SQRT2, SQRT3, ZERO, as_scalar, sign
from .serialize import scalar_to_json

__all__ = [
    "ProjectiveError",
    "MeetDegenerate",
    "DisplayMismatch",
    "WedgeIntersectsPolytope",
    "HemisphereViolation",
    "SeparationFailure",
    "TransversalityFailure",
    "KConfiguration",
    "PPConfiguration",
    "WeakTriple",
    "LawrenceExtension",
    "LAMBDA",
    "build_K",
    "lambda_minors",
    "verify_lambda",
    "build_weak_triple",
    "subdirect_cone",
    "lawrence_extension",
    "build_pcctp",
    "sparse_rank",
]

LAMBDA = SQRT2 - 1


class ProjectiveError(CCTError):
    pass


class MeetDegenerate(ProjectiveError):
    def __init__(self, step, line, msg=""):
        super().__init__(f"step {step}, {line}: {msg}" if msg else f"step {step}, {line}")
        self.step, self.line = step, line


class DisplayMismatch(ProjectiveError):
    pass


class WedgeIntersectsPolytope(ProjectiveError):
    pass


class HemisphereViolation(ProjectiveError):
    pass


class SeparationFailure(ProjectiveError):
    pass


class TransversalityFailure(ProjectiveError):
    pass


# K-configuration


def _sp(*pts) -> LinearSubspace:
    return span(pts)


def _point(step, line, *spaces):
    """The unique point of S⁴₊ (or of the equator) in the meet of the given spans."""
    M = spaces[0]
    for S in spaces[1:]:
        M = meet(M, S)
    if M.dim != 1:
        raise MeetDegenerate(step, line, f"meet has dimension {M.dim}")
    p = M.basis[0]
    if sign(p[-1]) != 0:
        return tuple(x / p[-1] for x in p)
    return canonical(p)


_SIGN = {"+": 1, "-": -1}


def _displayed(lam) -> dict:
    """The coordinates printed alongside each construction step."""
    h, r = FieldElement(1, 0, 0, 0) / 2, SQRT3 / 2
    tails = {1: (-2, 0), 2: (1, SQRT3), 3: (1, -SQRT3)}
    ttails = {1: (2, 0), 2: (-1, -SQRT3), 3: (-1, SQRT3)}
    ptails = {1: (1, 0), 2: (-h, -r), 3: (-h, r)}
    optails = {1: (-1, 0), 2: (h, r), 3: (h, -r)}
    out = {}
    for i in (1, 2, 3):
        for s in "+-":
            e = _SIGN[s]
            out[f"a{i}{s}"] = vec(e, 0, *tails[i], 1)
            out[f"oa{i}{s}"] = vec(0, e, *tails[i], 1)
            out[f"ta{i}{s}"] = vec(e, 0, *ttails[i], 1)
            out[f"ota{i}{s}"] = vec(0, e, *ttails[i], 1)
            out[f"psi{i}{s}"] = vec(e, 0, *ptails[i], 1)
            out[f"opsi{i}{s}"] = vec(0, e, *optails[i], 1)
    out["b23"] = vec(0, 0, 1, 0, 1)
    out["b13"] = vec(0, 0, -h, -r, 1)
    out["b12"] = vec(0, 0, -h, r, 1)
    out["b0"] = vec(0, 0, 0, 0, 1)
    out["b1"] = vec(0, 0, -2, 0, 1)
    out["b12++"] = vec(h, h, -h, r, 1)
    out["b12+-"] = vec(h, -h, -h, r, 1)
    for s3, s4 in itertools.product("+-", repeat=2):
        x, y = _SIGN[s3] * lam, _SIGN[s4] * lam
        out[f"w1{s3}{s4}"] = vec(x, y, -2, 0, 1)
        if s3 == s4:
            out[f"w2{s3}{s4}"] = vec(x, y, 1, SQRT3, 1)
            out[f"w3{s3}{s4}"] = vec(x, y, 1, -SQRT3, 1)
        else:
            for i in (1, 2, 3):
                out[f"tw{i}{s3}{s4}"] = vec(x, y, *ttails[i], 1)
    return out


@dataclass
class KConfiguration:
    """The labelled points of K_λ plus the four points at infinity."""

    lam: FieldElement
    points: dict
    steps: dict
    certificate: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, label):
        return self.points[label]

    @property
    def omega(self) -> list:
        """Ω(λ): the twelve layer-0 candidates."""
        return [l for l in self.points if l[:2] in ("w1", "w2", "w3") and l[2] == l[3]] + [
            l for l in self.points if l.startswith("tw")
        ]

    @property
    def layer1(self) -> list:
        return [l for l in self.points if l.startswith(("psi", "opsi"))]

    @property
    def framing(self) -> list:
        """Labels of Q, the points that match F₀(CT^s[1]) at λ = √2-1."""
        return self.omega + self.layer1

    @property
    def infinity(self) -> list:
        return [f"inf{i}" for i in range(1, 5)]

    def to_json(self) -> dict:
        return {
            "schema": "cct/1",
            "kind": "k-configuration",
            "lambda": scalar_to_json(self.lam),
            "points": {l: [scalar_to_json(x) for x in p] for l, p in self.points.items()},
            "steps": self.steps,
            "certificate": self.certificate,
        }


def _in(S: LinearSubspace, p) -> bool:
    return S.contains(p)


def _w1_certificate(P) -> dict:
    """The six incidence conditions that pin W₁ up to dilation."""
    plane = _sp(P["a1+"], P["a1-"], P["oa1+"], P["oa1-"])
    X = meet(_sp(P["b1"], P["b12"], P["b12++"]), plane)
    Y = meet(_sp(P["b1"], P["b12"], P["b12+-"]), plane)
    wa, wb, wc, wd = P["w1++"], P["w1+-"], P["w1--"], P["w1-+"]
    axis = _sp(P["a1+"], P["a1-"])
    oaxis = _sp(P["oa1+"], P["oa1-"])
    # ωa and °a₁⁺ on the same side of sp{a₁⁺, a₁⁻} inside the plane: compare
    # the °a₁⁺-coefficient in the basis (a₁⁺, a₁⁻, °a₁⁺)
    normal = [n for n in nullspace([P["a1+"], P["a1-"]], 5) if sign(dot(n, P["oa1+"])) != 0][0]
    same_side = sign(dot(normal, wa)) == sign(dot(normal, P["oa1+"]))
    return {
        "in_plane": all(_in(plane, w) for w in (wa, wb, wc, wd)),
        "ac_on_X": X.dim == 2 and _in(X, wa) and _in(X, wc),
        "bd_on_Y": Y.dim == 2 and _in(Y, wb) and _in(Y, wd),
        "ad_bc_on_oaxis": _in(oaxis, P["w_ad"]) and _in(oaxis, P["w_bc"]),
        "ab_on_axis": _in(axis, P["w_ab"]),
        "same_side": same_side,
    }


def build_K(lam=None, check_display: bool = True) -> KConfiguration:
    """Construct K_λ ∪ {∞₁..∞₄} by exact meets, step by step.

    Every intermediate point is compared with its displayed coordinates
    when ``check_display`` is set; W₁ is placed from its parametric form
    and its six defining incidences are recorded as a certificate.
    """
    lam = LAMBDA if lam is None else as_scalar(lam)
    if sign(lam) <= 0:
        raise ValueError("λ must be positive")
    D = _displayed(lam)
    P, steps = {}, {}

    def put(step, label, value):
        if check_display and label in D and tuple(value) != D[label]:
            raise DisplayMismatch(f"step {step}: {label} = {value}, expected {D[label]}")
        P[label] = tuple(value)
        steps[label] = step

    others = {1: (2, 3), 2: (1, 3), 3: (1, 2)}
    # I: Δ₂×Δ₂ and the points it determines
    for i in (1, 2, 3):
        for s in "+-":
            put("I", f"a{i}{s}", D[f"a{i}{s}"])
        put("I", f"oa{i}+", D[f"oa{i}+"])
    for i, j in ((2, 3), (1, 3), (1, 2)):
        put("I", f"b{i}{j}", _point("I", f"b{i}{j}", _sp(P[f"a{i}+"], P[f"a{j}-"]), _sp(P[f"a{i}-"], P[f"a{j}+"])))
    for i in (1, 2, 3):
        j = others[i][0]
        bij = P["b" + "".join(map(str, sorted((i, j))))]
        put("I", f"oa{i}-", _point("I", f"oa{i}-", _sp(P[f"a{i}+"], P[f"a{i}-"], P[f"oa{i}+"]), _sp(bij, P[f"oa{j}+"])))
    # b₀: the common point of the planes through each quadrilateral diagonal pair
    # a_i^±, °a_i^± and the matching b_jk
    planes = []
    for i, (j, k) in others.items():
        bjk = P[f"b{j}{k}"]
        planes += [_sp(P[f"a{i}+"], P[f"a{i}-"], bjk), _sp(P[f"oa{i}+"], P[f"oa{i}-"], bjk)]
    put("I", "b0", _point("I", "b0", *planes))
    # II: the antipodal triangle, through b₀
    for s, t in (("+", "-"), ("-", "+")):
        tri = _sp(*(P[f"a{i}{s}"] for i in (1, 2, 3)))
        otri = _sp(*(P[f"oa{i}{s}"] for i in (1, 2, 3)))
        for k in (1, 2, 3):
            put("II", f"ta{k}{s}", _point("II", f"ta{k}{s}", tri, _sp(P["b0"], P[f"a{k}{t}"])))
            put("II", f"ota{k}{s}", _point("II", f"ota{k}{s}", otri, _sp(P["b0"], P[f"oa{k}{t}"])))
    # III: layer 1
    for s in "+-":
        for k, (i, j) in others.items():
            put("III", f"psi{k}{s}", _point("III", f"psi{k}{s}", _sp(P[f"a{k}{s}"], P[f"ta{k}{s}"]), _sp(P[f"a{i}{s}"], P[f"a{j}{s}"])))
            put(
                "III",
                f"opsi{k}{s}",
                _point("III", f"opsi{k}{s}", _sp(P[f"oa{k}{s}"], P[f"ota{k}{s}"]), _sp(P[f"ota{i}{s}"], P[f"ota{j}{s}"])),
            )
    # IV: transition to layer 0
    put("IV", "b1", _point("IV", "b1", _sp(P["a1+"], P["a1-"]), _sp(P["oa1+"], P["oa1-"])))
    put("IV", "b12++", _point("IV", "b12++", _sp(P["a1+"], P["oa2+"]), _sp(P["a2+"], P["oa1+"])))
    put("IV", "b12+-", _point("IV", "b12+-", _sp(P["a1+"], P["oa2-"]), _sp(P["a2+"], P["oa1-"])))
    for s3, s4 in itertools.product("+-", repeat=2):
        put("IV", f"w1{s3}{s4}", D[f"w1{s3}{s4}"])
    wa, wb, wc, wd = P["w1++"], P["w1+-"], P["w1--"], P["w1-+"]
    put("IV", "w_ad", _point("IV", "w_ad", _sp(wa, P["a1-"]), _sp(wd, P["a1+"])))
    put("IV", "w_bc", _point("IV", "w_bc", _sp(wb, P["a1-"]), _sp(wc, P["a1+"])))
    put("IV", "w_ab", _point("IV", "w_ab", _sp(wa, P["oa1-"]), _sp(wb, P["oa1+"])))
    w1 = _w1_certificate(P)
    if not all(w1.values()):
        raise MeetDegenerate("IV", "W₁", f"incidence conditions fail: {w1}")
    # V: transfer W₁ to the other five quadrilaterals
    for s3, s4 in itertools.product("+-", repeat=2):
        w = P[f"w1{s3}{s4}"]
        if s3 == s4:
            for i in (2, 3):
                quad = _sp(P[f"a{i}+"], P[f"a{i}-"], P[f"oa{i}+"], P[f"oa{i}-"])
                label = f"w{i}{s3}{s4}"
                put("V", label, _point("V", label, quad, _sp(P["a1+"], P[f"a{i}+"], w), _sp(P["oa1+"], P[f"oa{i}+"], w)))
        else:
            for i in (1, 2, 3):
                quad = _sp(P[f"ta{i}+"], P[f"ta{i}-"], P[f"ota{i}+"], P[f"ota{i}-"])
                label = f"tw{i}{s3}{s4}"
                put("V", label, _point("V", label, quad, _sp(P["a1+"], P[f"ta{i}+"], w), _sp(P["oa1+"], P[f"ota{i}+"], w)))
    # VII: points at infinity
    put("VII", "inf1", _point("VII", "inf1", _sp(P["a1+"], P["a2+"]), _sp(P["a1-"], P["a2-"])))
    put("VII", "inf2", _point("VII", "inf2", _sp(P["a3+"], P["a2+"]), _sp(P["a3-"], P["a2-"])))
    put("VII", "inf3", _point("VII", "inf3", _sp(P["a1+"], P["a1-"]), _sp(P["a2+"], P["a2-"])))
    put("VII", "inf4", _point("VII", "inf4", _sp(P["oa1+"], P["oa1-"]), _sp(P["oa2+"], P["oa2-"])))
    K = KConfiguration(lam, P, steps)
    K.certificate = {
        "w1": w1,
        "equator": all(sign(P[l][-1]) == 0 for l in K.infinity),
        "omega_is_orbit": _omega_is_orbit(K),
        "distinct": _distinct(P.values()),
    }
    if not K.certificate["distinct"]:
        raise MeetDegenerate("VI", "K", "two constructed points coincide")
    return K


def _distinct(points) -> bool:
    pts = list(points)
    return all(not same_point(p, q) for p, q in itertools.combinations(pts, 2))


def _omega_is_orbit(K: KConfiguration) -> bool:
    """Ω(λ) is the 𝕽-orbit of ω̃₁^{+,-}."""
    orbit = {g.apply(K["tw1+-"]) for g in rotation_group()}
    return orbit == {K[l] for l in K.omega}


def matches_standard(K: KConfiguration) -> bool:
    """Ω'(λ) equals F₀(CT^s[1]) with the labelling g·ω̃₁^{+,-} ↔ g·ϑ₀, g·ψ₁⁺ ↔ g·ϑ₁."""
    return all(
        g.apply(K["tw1+-"]) == g.apply(THETA0) and g.apply(K["psi1+"]) == g.apply(THETA1) for g in rotation_group()
    ) and {g.apply(K["psi1+"]) for g in rotation_group()} == {K[l] for l in K.layer1}


def _lambda_rows(lam) -> list:
    lam = as_scalar(lam)
    psi = vec(1, 0, 1, 0, 1)
    tw = vec(-lam, lam, 2, 0, 1)
    r34i = R34.inverse()
    r12i = R12.inverse()
    return [
        psi,
        (R12 * R34).apply(psi),
        (R12 * r34i).apply(psi),
        tw,
        (r12i * r34i).apply(tw),
        (r12i * R34).apply(tw),
    ]


def lambda_minors(lam) -> list:
    """The six maximal minors of the 6×5 incidence matrix (no sign precondition)."""
    rows = _lambda_rows(lam)
    return [det([r for j, r in enumerate(rows) if j != i]) for i in range(6)]


def verify_lambda(lam) -> bool:
    """True iff the six points pinning λ lie in a common hyperplane."""
    lam = as_scalar(lam)
    if sign(lam) <= 0:
        raise ValueError("λ must be positive")
    return all(sign(m) == 0 for m in lambda_minors(lam))


# weak projective triples


@dataclass
class WeakTriple:
    polytope: list
    framing: list
    points: list
    labels: list
    wedge: tuple
    width: int
    assumptions: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)


def _hyperplane_normal(points, dim):
    ns = nullspace([tuple(p) for p in points], dim)
    if len(ns) != 1:
        raise WedgeIntersectsPolytope(f"wedge points span a subspace of codimension {len(ns)}")
    return ns[0]


def _tilted(delta, n_lead, tail):
    return tuple([delta] * n_lead) + tuple(tail)


def _find_witness(points, n_lead, tail):
    delta = FieldElement(1, 0, 0, 0) / 8
    for _ in range(40):
        f = _tilted(delta, n_lead, tail)
        if all(sign(dot(f, p)) > 0 for p in points):
            return f
        delta = delta / 2
    return None


def build_weak_triple(n: int, K: KConfiguration | None = None, wedge=None, certify: bool | None = False) -> WeakTriple:
    """(CT^s[n], F₀(CT^s[1]), K ∖ F₀(CT^s[1])) with wedge sp{∞₁..∞₄}.

    ``wedge`` replaces the four spanning points of the wedge hyperplane.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    K = build_K() if K is None else K
    if not matches_standard(K):
        raise ProjectiveError("K does not contain F₀(CT^s[1])")
    T = standard_cct(n, certify)
    P = T.points()
    Q = [K[l] for l in K.framing]
    R_labels = [l for l in K.points if l not in K.framing]
    R = [K[l] for l in R_labels]
    spanning = [K[l] for l in K.infinity] if wedge is None else [tuple(w) for w in wedge]
    normal = _hyperplane_normal(spanning, 5)
    sides = {sign(dot(normal, p)) for p in P}
    if len(sides) != 1 or 0 in sides:
        raise WedgeIntersectsPolytope("the wedge hyperplane meets the polytope")
    if sides == {-1}:
        normal = tuple(-x for x in normal)
    if set(map(tuple, P)) & set(map(tuple, K.points.values())) - set(Q):
        raise HemisphereViolation("an external point is a polytope vertex")
    witness = _find_witness(list(P) + list(K.points.values()), 4, (ONE,))
    if witness is None:
        raise HemisphereViolation("no open hemisphere contains K and the polytope")
    return WeakTriple(
        polytope=P,
        framing=Q,
        points=R,
        labels=R_labels,
        wedge=normal,
        width=n,
        assumptions={"framing": "F₀(CT^s[1]) frames CT^s[n] by uniqueness of elementary extensions"},
        certificate={
            "wedge_side": "strict",
            "vertices_tested": len(P),
            "hemisphere": [scalar_to_json(x) for x in witness],
            "counts": {"K": len(K), "Q": len(Q), "R": len(R)},
        },
    )


# subdirect cone


@dataclass
class PPConfiguration:
    polytope: list
    points: list
    dim: int
    witness: tuple
    labels: list = field(default_factory=list)
    certificate: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema": "cct/1",
            "kind": "pp-configuration",
            "dim": self.dim,
            "polytope": [[scalar_to_json(x) for x in p] for p in self.polytope],
            "points": [[scalar_to_json(x) for x in p] for p in self.points],
            "labels": self.labels,
            "witness": [scalar_to_json(x) for x in self.witness],
        }


def subdirect_cone(tr: WeakTriple, eps=1, retries: int = 8) -> PPConfiguration:
    """Pyramid over P with apex v and base cut by Ĥ ⊃ H, plus Q ∪ R on the equator of S⁵.

    With n the outer wedge normal, the apex is (-n, 1) and Ĥ has normal
    (n, -ε|n|²); each base point is the meet of sp{v, p} with Ĥ.
    """
    n = tr.wedge
    nn = dot(n, n)
    eps = as_scalar(eps)
    v = tuple(-x for x in n) + (ONE,)
    for _ in range(retries):
        h = tuple(n) + (-eps * nn,)
        if sign(dot(h, v)) < 0 and all(sign(dot(h, tuple(p) + (ZERO,))) > 0 for p in tr.polytope):
            break
        eps = eps / 2
    else:
        raise SeparationFailure("Ĥ does not separate the apex from the polytope")
    base = []
    for p in tr.polytope:
        p6 = tuple(p) + (ZERO,)
        alpha, beta = dot(h, p6), -dot(h, v)
        q = tuple(alpha * a + beta * b for a, b in zip(v, p6))
        if sign(dot(h, q)) != 0 or sign(alpha) <= 0 or sign(beta) <= 0:
            raise SeparationFailure("base point is not on the segment [v, p] inside Ĥ")
        base.append(q)
    # a hyperplane through v with every base point strictly on one side
    g = tuple(ZERO for _ in range(4)) + (ONE, ONE) if all(sign(x) == 0 for x in n[:4]) else None
    if g is None or sign(dot(g, v)) != 0 or any(sign(dot(g, q)) <= 0 for q in base):
        g = _apex_support(v, base)
    ext_labels = ["Q"] * len(tr.framing) + list(tr.labels)
    ext = [tuple(p) + (ZERO,) for p in tr.framing + tr.points]
    pyramid = [v] + base
    witness = _find_witness(pyramid + ext, 4, (ONE, 2 * ONE))
    if witness is None:
        raise SeparationFailure("no open hemisphere contains the PP configuration")
    return PPConfiguration(
        polytope=pyramid,
        points=ext,
        dim=5,
        witness=witness,
        labels=ext_labels,
        certificate={"eps": scalar_to_json(eps), "tilt": [scalar_to_json(x) for x in h], "apex_support": [scalar_to_json(x) for x in g]},
    )


def _apex_support(v, base):
    # fallback: the functional x ↦ <x, m> - <v, m>/<v, v>·<x, v> for m the base-sum direction
    m = tuple(sum(col, ZERO) for col in zip(*base))
    vm, vv = dot(v, m), dot(v, v)
    g = tuple(a * vv - vm * b for a, b in zip(m, v))
    if any(sign(dot(g, q)) <= 0 for q in base):
        raise SeparationFailure("apex is not a vertex of the pyramid")
    return g


# Lawrence extensions


@dataclass
class LawrenceExtension:
    vertices: list
    labels: list
    rank: int
    base_dim: int
    heights: tuple
    certificate: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        """Dimension of the spherical polytope: linear rank minus one."""
        return self.rank - 1

    @property
    def ambient(self) -> int:
        return len(self.vertices[0]) - 1

    def to_json(self) -> dict:
        def sparse(p):
            return {str(i): scalar_to_json(x) for i, x in enumerate(p) if sign(x) != 0}

        return {
            "schema": "cct/1",
            "kind": "lawrence-extension",
            "ambient": self.ambient,
            "dim": self.dim,
            "rank": self.rank,
            "heights": list(self.heights),
            "labels": self.labels,
            "vertices": [sparse(p) for p in self.vertices],
        }


def sparse_rank(rows) -> int:
    """Rank by Gaussian elimination on dict rows (column -> nonzero entry)."""
    pivots = {}
    r = 0
    for row in rows:
        cur = {j: x for j, x in (row.items() if isinstance(row, dict) else enumerate(row)) if sign(x) != 0}
        while cur:
            j = min(cur)
            if j not in pivots:
                pivots[j] = cur
                r += 1
                break
            piv = pivots[j]
            f = cur[j] / piv[j]
            for k, y in piv.items():
                z = cur.get(k, ZERO) - f * y
                if sign(z) == 0:
                    cur.pop(k, None)
                else:
                    cur[k] = z
    return r


def lawrence_extension(pp: PPConfiguration, heights=(1, 2)) -> LawrenceExtension:
    """Lift the i-th external point r to (r, h₁eᵢ′) and (r, h₂eᵢ′) with 0 < h₁ < h₂."""
    d1 = len(pp.polytope[0])
    k = len(pp.points)
    lo, hi = (as_scalar(h) for h in heights)
    if sign(lo) <= 0 or sign(hi - lo) <= 0:
        raise ValueError("heights must satisfy 0 < h₁ < h₂")
    zeros = (ZERO,) * k

    def lift(p, i=None, h=ZERO):
        tail = list(zeros)
        if i is not None:
            tail[i] = h
        return tuple(p) + tuple(tail)

    verts = [lift(p) for p in pp.polytope]
    labels = ["P"] * len(pp.polytope)
    lower, upper = [], []
    for i, r in enumerate(pp.points):
        lower.append(lift(r, i, lo))
        upper.append(lift(r, i, hi))
    for i in range(k):
        verts += [lower[i], upper[i]]
        labels += [f"r{i}_lo", f"r{i}_hi"]
    # r̲ᵢ = α·r + β·r̄ᵢ with α, β > 0 (read off the i-th new axis and one old coordinate)
    for i, r in enumerate(pp.points):
        beta = lo / hi
        alpha = ONE - beta
        comb = tuple(alpha * a + beta * b for a, b in zip(lift(r), upper[i]))
        if comb != lower[i] or sign(alpha) <= 0:
            raise TransversalityFailure(f"lower lift of point {i} is not inside [r, r̄]")
    # transversality: the i-th new axis functional vanishes on P, every r, and
    # every other r̄, but not on r̄ᵢ, so sp{r, r̄ᵢ} meets the rest in r only
    for i in range(k):
        col = d1 + i
        if sign(upper[i][col]) == 0:
            raise TransversalityFailure(f"r̄_{i} lies in the span of the others")
    rk = sparse_rank(verts)
    return LawrenceExtension(
        vertices=verts,
        labels=labels,
        rank=rk,
        base_dim=pp.dim,
        heights=(str(lo), str(hi)),
        certificate={"midpoint": True, "transversal": True},
    )


def build_pcctp(n: int, certify: bool | None = False) -> LawrenceExtension:
    """PCCTP₆₉[n]: the Lawrence extension of the subdirect cone over CT^s[n]."""
    tr = build_weak_triple(n, certify=certify)
    pp = subdirect_cone(tr)
    L = lawrence_extension(pp)
    expected = 12 * (n + 1) + 129
    if len(L.vertices) != expected:
        raise ProjectiveError(f"{len(L.vertices)} vertices, expected {expected}")
    if L.dim != 69:
        raise ProjectiveError(f"output has dimension {L.dim}, expected 69")
    L.certificate.update({"vertices": expected, "pyramid": len(pp.polytope), "external": len(pp.points)})
    return L
