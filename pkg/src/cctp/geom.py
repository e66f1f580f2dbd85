"""Spherical linear algebra in homogeneous coordinates.

A point of S^d is a nonzero vector of R^{d+1} up to positive scaling.  All
predicates are polynomial sign tests, so nothing here ever takes a square
root: midpoints are carried unnormalized and angles are compared through
the sign of a projected inner product.

Vectors are plain tuples of scalars (``FieldElement`` or mpmath floats);
``SPoint`` wraps one with a normalization tag for the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath

from .scalar import ONE, ZERO, FieldElement, as_scalar, get_precision, sign

__all__ = [
    "GeometryError",
    "PoleProjection",
    "DegenerateAnchor",
    "DegenerateTangent",
    "SPoint",
    "LinearSubspace",
    "Hemisphere",
    "vec",
    "dot",
    "add",
    "sub",
    "scale",
    "neg",
    "rank",
    "rref",
    "nullspace",
    "det",
    "span",
    "meet",
    "side",
    "canonical",
    "same_point",
    "proportional",
    "orthogonal_complement",
    "project_equator",
    "clifford_lambda",
    "fiber_side",
    "pi_equal",
    "projected_inner",
]


class GeometryError(ValueError):
    pass


class PoleProjection(GeometryError):
    pass


class DegenerateAnchor(GeometryError):
    pass


class DegenerateTangent(GeometryError):
    pass


Vector = tuple


def vec(*entries) -> tuple:
    """Build a vector, coercing ints/Fractions/strings to field elements."""
    if len(entries) == 1 and not isinstance(entries[0], (int, str, FieldElement)):
        try:
            entries = tuple(entries[0])
        except TypeError:
            pass
    return tuple(as_scalar(e) for e in entries)


def dot(u: Sequence, v: Sequence):
    it = iter(zip(u, v))
    x, y = next(it)
    s = x * y
    for x, y in it:
        s = s + x * y
    return s


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def scale(s, u):
    return tuple(s * x for x in u)


def neg(u):
    return tuple(-x for x in u)


def _is_exact(rows) -> bool:
    for r in rows:
        for x in r:
            return isinstance(x, FieldElement)
    return True


def _tolerance(rows):
    big = mpmath.mpf(0)
    for r in rows:
        for x in r:
            a = abs(x)
            if a > big:
                big = a
    return big * mpmath.ldexp(1, -get_precision() // 2)


def _zero_test(rows):
    if _is_exact(rows):
        return lambda x: not x
    tol = _tolerance(rows)
    return lambda x: abs(x) <= tol


# elimination


def rref(rows: Sequence[Sequence]) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form and pivot columns.

    Exact entries use pivots with the smallest denominators to curb growth;
    float entries use partial pivoting with a relative tolerance tied to the
    run precision.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    exact = _is_exact(m)
    iszero = _zero_test(m)
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        best = None
        for i in range(r, len(m)):
            x = m[i][col]
            if iszero(x):
                continue
            if exact:
                key = x.integer_form()[4] + sum(abs(t) for t in x.integer_form()[:4])
                if best is None or key < best[0]:
                    best = (key, i)
            else:
                if best is None or abs(x) > best[0]:
                    best = (abs(x), i)
        if best is None:
            continue
        i = best[1]
        m[r], m[i] = m[i], m[r]
        inv = ONE / m[r][col] if exact else 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        m[r][col] = ONE if exact else mpmath.mpf(1)
        for j in range(len(m)):
            if j == r:
                continue
            f = m[j][col]
            if iszero(f):
                if not exact:
                    m[j][col] = mpmath.mpf(0)
                continue
            rowr = m[r]
            m[j] = [x - f * y if y else x for x, y in zip(m[j], rowr)]
            m[j][col] = ZERO if exact else mpmath.mpf(0)
        pivots.append(col)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def _bareiss_rank(rows) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    prev = ONE
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            row_i, row_r = m[i], m[r]
            m[i] = [(p * row_i[j] - f * row_r[j]) / prev if j > col else ZERO for j in range(ncols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def rank(rows: Sequence[Sequence]) -> int:
    """Rank; fraction-free (Bareiss) elimination for exact entries."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return 0
    if _is_exact(rows):
        return _bareiss_rank(rows)
    return len(rref(rows)[1])


def det(matrix: Sequence[Sequence]):
    """Determinant by Bareiss elimination (exact) or pivoted elimination (float)."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return ONE
    if not _is_exact(m):
        with mpmath.workprec(get_precision()):
            return mpmath.det(mpmath.matrix(m))
    prev = ONE
    s = 1
    for k in range(n - 1):
        if not m[k][k]:
            sw = next((i for i in range(k + 1, n) if m[i][k]), None)
            if sw is None:
                return ZERO
            m[k], m[sw] = m[sw], m[k]
            s = -s
        p = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (p * m[i][j] - f * m[k][j]) / prev
            m[i][k] = ZERO
        prev = p
    return m[n - 1][n - 1] if s > 0 else -m[n - 1][n - 1]


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Basis of {x : row·x = 0 for every row}."""
    rows = [tuple(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [tuple(ONE if i == j else ZERO for j in range(ncols)) for i in range(ncols)]
    exact = _is_exact(rows)
    one, zero = (ONE, ZERO) if exact else (mpmath.mpf(1), mpmath.mpf(0))
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def orthogonal_complement(vectors: Sequence[Sequence], dim: int | None = None) -> list[tuple]:
    return nullspace(vectors, dim)


# points and subspaces


def canonical(v: Sequence) -> tuple:
    """Antipodal representative: last coordinate positive, else first nonzero positive."""
    v = tuple(v)
    for x in reversed(v):
        s = sign(x)
        if s:
            break
    else:
        raise GeometryError("zero vector")
    if sign(v[-1]) < 0 or (sign(v[-1]) == 0 and _first_sign(v) < 0):
        return neg(v)
    return v


def _first_sign(v) -> int:
    for x in v:
        s = sign(x)
        if s:
            return s
    return 0


def proportional(u: Sequence, v: Sequence) -> bool:
    """True iff u and v are linearly dependent (same ray up to antipode)."""
    return rank([tuple(u), tuple(v)]) <= 1


def same_point(u: Sequence, v: Sequence) -> bool:
    """True iff u is a positive multiple of v (equal as points of the sphere)."""
    return proportional(u, v) and sign(dot(u, v)) > 0


@dataclass(frozen=True)
class SPoint:
    """A point of S^d in homogeneous coordinates.

    ``normalization`` records how ``coords`` is scaled: ``"homogeneous"``
    (last coordinate 1), ``"unit"`` or ``"ray"`` (unnormalized).
    """

    coords: tuple
    normalization: str = "ray"

    def __post_init__(self):
        object.__setattr__(self, "coords", vec(self.coords))
        if all(sign(x) == 0 for x in self.coords):
            raise GeometryError("an SPoint cannot be the zero vector")
        if self.normalization not in ("homogeneous", "unit", "ray"):
            raise ValueError(f"unknown normalization {self.normalization!r}")

    @classmethod
    def homogeneous(cls, *coords) -> "SPoint":
        p = cls(vec(*coords), "ray")
        return p.normalized()

    def normalized(self) -> "SPoint":
        """Rescale so the last coordinate is 1 (only off the equator)."""
        last = self.coords[-1]
        if sign(last) == 0:
            raise GeometryError("point on the equator has no homogeneous-last-1 form")
        return SPoint(tuple(x / last for x in self.coords), "homogeneous")

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def same(self, other) -> bool:
        return same_point(self.coords, _coords(other))


def _coords(x) -> tuple:
    return x.coords if isinstance(x, SPoint) else tuple(x)


@dataclass(frozen=True)
class LinearSubspace:
    """Linear subspace of R^{d+1}; ``basis`` is in reduced row echelon form."""

    ambient: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def equations(self) -> list[tuple]:
        return nullspace(self.basis, self.ambient) if self.basis else [
            tuple(ONE if i == j else ZERO for j in range(self.ambient)) for i in range(self.ambient)
        ]

    def contains(self, x) -> bool:
        x = _coords(x)
        if not self.basis:
            return all(sign(t) == 0 for t in x)
        return rank(list(self.basis) + [x]) == self.dim

    def point(self) -> tuple:
        """The canonical representative of a 1-dimensional subspace."""
        if self.dim != 1:
            raise GeometryError(f"subspace has dimension {self.dim}, not 1")
        return canonical(self.basis[0])

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))


def span(points: Iterable) -> LinearSubspace:
    rows = [_coords(p) for p in points]
    if not rows:
        raise GeometryError("span of an empty list")
    red, _ = rref(rows)
    return LinearSubspace(len(rows[0]), tuple(red))


def meet(U: LinearSubspace, V: LinearSubspace) -> LinearSubspace:
    """Intersection by stacking the defining equations of both subspaces."""
    if U.ambient != V.ambient:
        raise GeometryError("ambient dimensions differ")
    eqs = U.equations() + V.equations()
    sol = nullspace(eqs, U.ambient)
    if not sol:
        return LinearSubspace(U.ambient, ())
    return span(sol)


@dataclass(frozen=True)
class Hemisphere:
    """Closed hemisphere with interior {x : <normal, x> < 0}."""

    normal: tuple

    def __post_init__(self):
        object.__setattr__(self, "normal", vec(self.normal))
        if all(sign(x) == 0 for x in self.normal):
            raise GeometryError("hemisphere normal must be nonzero")


def side(H: Hemisphere, x) -> int:
    return sign(dot(H.normal, _coords(x)))


# projections to the equator and Clifford tori


def project_equator(x) -> tuple:
    """Drop the last coordinate: the orthogonal projection onto S^3_eq."""
    c = _coords(x)
    head = c[:-1]
    if all(sign(t) == 0 for t in head):
        raise PoleProjection("point is a pole of the sphere")
    return head


def clifford_lambda(y):
    """λ with y/|y| on the weighted Clifford torus C_λ."""
    y = _coords(y)
    a = y[0] * y[0] + y[1] * y[1]
    b = y[2] * y[2] + y[3] * y[3]
    if sign(a + b) == 0:
        raise GeometryError("zero vector")
    return (b + b) / (a + b)


def _pair(i: int) -> tuple[int, int]:
    if i == 0:
        return (0, 1)
    if i == 2:
        return (2, 3)
    raise ValueError("fiber index must be 0 or 2")


def fiber_side(i: int, anchor, x) -> int:
    """Side of x relative to the fiber-span of ``anchor`` under π_i."""
    p, q = _pair(i)
    a, x = _coords(anchor), _coords(x)
    if sign(a[p]) == 0 and sign(a[q]) == 0:
        raise DegenerateAnchor("anchor lies on the degenerate torus")
    return sign(a[q] * x[p] - a[p] * x[q])


def pi_equal(i: int, x, y) -> bool:
    """True iff π_i(x) = π_i(y): the coordinate pairs are positively proportional."""
    p, q = _pair(i)
    x, y = _coords(x), _coords(y)
    for z in (x, y):
        if sign(z[p]) == 0 and sign(z[q]) == 0:
            raise DegenerateAnchor("point lies on the degenerate torus")
    cross = x[p] * y[q] - x[q] * y[p]
    if sign(cross) != 0:
        return False
    return sign(x[p] * y[p] + x[q] * y[q]) > 0


def projected_inner(m, u, w):
    """⟨u,w⟩ − ⟨u,m⟩⟨w,m⟩/⟨m,m⟩: its sign is the sign of cos∠(u, m, w)."""
    m, u, w = _coords(m), _coords(u), _coords(w)
    mm = dot(m, m)
    if sign(mm) == 0:
        raise GeometryError("m must be nonzero")
    um, wm = dot(u, m), dot(w, m)
    for z, zm in ((u, um), (w, wm)):
        t = dot(z, z) - zm * zm / mm
        if sign(t) == 0:
            raise DegenerateTangent("direction is proportional to m")
    return dot(u, w) - um * wm / mm
