"""The rotation group 𝕽 and its extension 𝔖 by the reflection in x₄.

𝕽 = ⟨r₃,₄², r₃,₄·r₁,₂⟩ is cyclic of order 12, generated by c = r₃,₄·r₁,₂,
and cᵏ = r₃,₄ᵏ·r₁,₂ᵏ because the two rotations act on disjoint planes.
"""

from __future__ import annotations

from functools import lru_cache

from .scalar import HALF, ONE, SQRT3, ZERO, FieldElement, approx, get_precision

__all__ = [
    "GroupElement",
    "IDENTITY",
    "R12",
    "R34",
    "S_REFLECT",
    "C",
    "rot",
    "rotation_group",
    "symmetry_group",
]


class GroupElement:
    """A 5×5 orthogonal matrix over Q(√2, √3)."""

    __slots__ = ("matrix", "_hash")

    def __init__(self, matrix):
        self.matrix = tuple(tuple(FieldElement.from_fraction(x) if not isinstance(x, FieldElement) else x for x in row) for row in matrix)
        self._hash = hash(self.matrix)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b = self.matrix, other.matrix
        n = len(a)
        return GroupElement(
            tuple(
                tuple(_sum(a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]) for j in range(n))
                for i in range(n)
            )
        )

    def __pow__(self, k: int) -> "GroupElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = IDENTITY
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "GroupElement":
        m = self.matrix
        return GroupElement(tuple(tuple(m[j][i] for j in range(len(m))) for i in range(len(m))))

    def apply(self, v):
        """Act on a 5-vector, or on a 4-vector of the equator via the top-left block."""
        m = self.matrix if isinstance(v[0], FieldElement) else self.float_matrix()
        n = len(v)
        return tuple(_sum(m[i][j] * v[j] for j in range(n) if m[i][j]) for i in range(n))

    def float_matrix(self):
        """Entries rounded to the current run precision (float backend)."""
        bits = get_precision()
        cache = _FLOAT_CACHE.setdefault(self, {})
        if bits not in cache:
            cache[bits] = tuple(tuple(approx(x, bits) for x in row) for row in self.matrix)
        return cache[bits]

    __call__ = apply

    def is_orthogonal(self) -> bool:
        return (self.inverse() * self) == IDENTITY

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GroupElement({[[str(x) for x in row] for row in self.matrix]})"


_FLOAT_CACHE: dict = {}


def _sum(terms):
    s = None
    for t in terms:
        s = t if s is None else s + t
    return ZERO if s is None else s


def _matrix(entries: dict) -> GroupElement:
    m = [[ONE if i == j else ZERO for j in range(5)] for i in range(5)]
    for (i, j), x in entries.items():
        m[i][j] = x
    return GroupElement(m)


IDENTITY = _matrix({})
R12 = _matrix({(0, 0): ZERO, (0, 1): -ONE, (1, 0): ONE, (1, 1): ZERO})
R34 = _matrix({(2, 2): HALF, (2, 3): -SQRT3 / 2, (3, 2): SQRT3 / 2, (3, 3): HALF})
S_REFLECT = _matrix({(3, 3): -ONE})
C = R34 * R12


@lru_cache(maxsize=None)
def rot(k: int) -> GroupElement:
    """cᵏ = r₃,₄ᵏ r₁,₂ᵏ for any integer k (taken mod 12)."""
    k %= 12
    if k == 0:
        return IDENTITY
    return rot(k - 1) * C


def rotation_group() -> list[GroupElement]:
    return [rot(k) for k in range(12)]


def symmetry_group() -> list[GroupElement]:
    return rotation_group() + [S_REFLECT * g for g in rotation_group()]
