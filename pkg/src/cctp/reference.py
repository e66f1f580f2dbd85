"""Reference data: the known projectively unique 4-polytopes and Δ₂×Δ₂."""

from __future__ import annotations

from typing import NamedTuple

from .geom import vec
from .scalar import SQRT3

__all__ = ["Polytope4", "SHEPHARD_LIST", "product_of_triangles"]


class Polytope4(NamedTuple):
    name: str
    construction: str
    dual: str
    kind: str
    f_vector: tuple
    facets: str


SHEPHARD_LIST = (
    Polytope4("P1", "Δ4", "P1", "simplicial", (5, 10, 10, 5), "5 tetrahedra"),
    Polytope4("P2", "□ * Δ1", "P2", "", (6, 11, 11, 6), "4 tetrahedra, 2 square pyramids"),
    Polytope4("P3", "(Δ2 ⊕ Δ1) * Δ0", "P4", "", (6, 14, 15, 7), "6 tetrahedra, 1 bipyramid"),
    Polytope4("P4", "(Δ2 × Δ1) * Δ0", "P3", "", (7, 15, 14, 6), "2 tetrahedra, 3 square pyramids, 1 prism"),
    Polytope4("P5", "Δ3 ⊕ Δ1", "P6", "simplicial", (6, 14, 16, 8), "8 tetrahedra"),
    Polytope4("P6", "Δ3 × Δ1", "P5", "simple", (8, 16, 14, 6), "2 tetrahedra, 4 prisms"),
    Polytope4("P7", "Δ2 ⊕ Δ2", "P8", "simplicial", (6, 15, 18, 9), "9 tetrahedra"),
    Polytope4("P8", "Δ2 × Δ2", "P7", "simple", (9, 18, 15, 6), "6 prisms"),
    Polytope4("P9", "(□, v) ⊕ (□, v)", "P10", "", (7, 17, 18, 8), "4 square pyramids, 4 tetrahedra"),
    Polytope4("P10", "", "P9", "", (8, 18, 17, 7), "2 prisms, 4 square pyramids, 1 tetrahedron"),
    Polytope4("P11", "v.split(Δ2 × Δ1)", "P11", "", (7, 17, 17, 7), "3 tetrahedra, 2 square pyramids, 2 bipyramids"),
)


def product_of_triangles() -> dict:
    """Δ₂×Δ₂ in S⁴₊: the triangles {e₁, -e₁, e₂} and the tails {(-2,0), (1,√3), (1,-√3)}.

    Labels follow the K construction: ``a{i}±`` and ``oa{i}+``.
    """
    tails = {1: (-2, 0), 2: (1, SQRT3), 3: (1, -SQRT3)}
    out = {}
    for i, t in tails.items():
        out[f"a{i}+"] = vec(1, 0, *t, 1)
        out[f"a{i}-"] = vec(-1, 0, *t, 1)
        out[f"oa{i}+"] = vec(0, 1, *t, 1)
    return out
