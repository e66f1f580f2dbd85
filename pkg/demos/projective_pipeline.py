"""From the standard tube to a 69-dimensional polytope.

Run: python demos/projective_pipeline.py
"""

from fractions import Fraction

from cctp import SQRT2, build_K, build_pcctp, verify_lambda
from cctp.projective import build_weak_triple, subdirect_cone

# The configuration K is built by meets of spans, starting from a product of
# two triangles.  Every constructed point is compared with its expected value.
K = build_K()
print(f"K has {len(K)} points: {len(K.framing)} framing, {len(K.points) - len(K.framing)} external")
print("first layer-0 point:", [str(c) for c in K["tw1+-"]])

# Only one positive λ puts six of these points in a common hyperplane.
print("\nλ = √2-1 certified:", verify_lambda(SQRT2 - 1))
print("λ = 2/5 certified:", verify_lambda(Fraction(2, 5)))

# The wedge through the four points at infinity misses the tube, and a
# single open hemisphere holds everything.
tr = build_weak_triple(3, K)
print("\nwedge side test over", tr.certificate["vertices_tested"], "vertices: strict")

# A pyramid over the tube adds one dimension; a Lawrence lift of the
# 64 outside points adds one per point.
pp = subdirect_cone(tr)
print("pyramid vertices:", len(pp.polytope), " outside points:", len(pp.points))
for n in range(1, 6):
    L = build_pcctp(n)
    print(f"n={n}: {len(L.vertices)} vertices, affine dimension {L.dim}")
