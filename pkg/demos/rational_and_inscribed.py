"""Two relatives of the standard tube: one with rational vertices, one on a sphere.

Run: python demos/rational_and_inscribed.py
"""

import mpmath

from cctp import build_inscribed, build_rational, precision
from cctp.variants import inscribed_parameters, kappa

# Rational seeds.  Rotating by 30° brings in √3, but only in the fourth
# coordinate, so scaling that axis by √3 clears it.
T, rat = build_rational(6, export_rational=True, certify=False)
print("rational seeds:")
for k in range(T.width + 1):
    print(f"  kappa{k}:", ", ".join(str(x) for x in kappa(T, k)[:3]))
print("vertices with rational image:", len(rat))

# The inscribed tube has algebraic seeds of high degree, so it lives in
# 256-bit floats.  The sphere is fitted on the bottom three layers and every
# later vertex is tested against it.
x, y, z = inscribed_parameters(256)
print("\ninscribed seed parameters:", mpmath.nstr(x, 10), mpmath.nstr(y, 10), mpmath.nstr(z, 10))
T, W = build_inscribed(8, bits=256)
with precision(256):
    for layer, r in sorted(W.residuals.items()):
        print(f"  layer {layer}: worst sphere residual {mpmath.nstr(r, 3)}")
    for k in range(6):
        v = kappa(T, k)
        norm = mpmath.sqrt(mpmath.fsum(mpmath.mpf(c) ** 2 for c in v))
        print(f"  kappa{k}: {', '.join(f'{float(c):.7f}' for c in v[:3])}  |kappa|={float(norm):.6f}")
