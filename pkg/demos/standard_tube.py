"""Grow the standard tube layer by layer and watch it stay convex.

Run: python demos/standard_tube.py
"""

import time

from cctp import check_convex_position, check_ideal, f_vector, standard_cct
from cctp.cli import kappa_rows

# Two seeds are all it takes.  Every later layer is forced: each new vertex
# closes a 3-cube whose other seven corners are already there.
T = standard_cct(10, certify=False)
print("seeds of the width-10 tube (first three coordinates, then λ):")
for row in kappa_rows(T):
    print("  ", *row)

# The exact denominators grow fast, but the numbers stay in Q(√2).
print("\nf-vector of the width-10 tube:", f_vector(T))

# Ideality and convex position are checked with exact signs.
for n in (3, 6, 10):
    S = T.restrict(0, n)
    t = time.perf_counter()
    ideal = check_ideal(S).passed
    cert = check_convex_position(S)
    print(f"width {n:2d}: ideal={ideal} convex={cert.passed} facets={len(cert.facets)} ({time.perf_counter() - t:.2f}s)")

# λ shrinks by roughly a factor of ten per layer: the layers crowd
# towards the circle where the first two coordinates carry all the weight.
