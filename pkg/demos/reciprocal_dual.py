"""The polar dual of a convex tube is again a tube, reciprocal to the original.

Run: python demos/reciprocal_dual.py
"""

from cctp import build_polar_dual, check_convex_position, check_reciprocal, standard_cct
from cctp.cct import control_cct
from cctp.dual import reciprocity_extension_harness

T = standard_cct(6, certify=False)
D = build_polar_dual(T, check_convex_position(T))
print(f"primal width {T.width}, dual width {D.width}, dual edges {len(D.edges)}")

# Every dual edge must meet its primal quadrilateral orthogonally, and it
# must point from the facet it came from towards the next one.
rep = check_reciprocal(control_cct(T), D)
print("reciprocal:", rep.reciprocal, " orientation preserving:", rep.orientation)

# Extend both sides independently.  Reciprocity survives.
for step, r in enumerate(reciprocity_extension_harness(T, D, 3)):
    print(f"  after {step} extensions: {'ok' if r.passed else 'broken'} ({r.edges_checked} edges)")

# Flip the dual to its antipode: still reciprocal, but the orientation goes.
flipped = D
for k, v in D.vertices.items():
    flipped = flipped.with_vertex(k, tuple(-x for x in v))
rep = check_reciprocal(control_cct(T), flipped)
print("antipodal dual: reciprocal", rep.reciprocal, " orientation", rep.orientation)
