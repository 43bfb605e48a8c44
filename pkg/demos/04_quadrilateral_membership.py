"""Exact membership for four normals with an antipodal pair.

Trapezoids admit a closed-form answer: a normalized weight vector is a
cone-volume vector iff the pair weight is light (g1 + g3 < g2 + g4), or it
is heavy but passes a square-root inequality with the right orientation.
Parallelograms are even simpler: both pair sums must equal one half.
"""

import numpy as np

from conevol import (
    parallelogram_membership,
    quad_canonicalize,
    trapezoid_membership,
    validate_normals,
)

ns = validate_normals([90.0, 180.0, 270.0, 45.0])
lab = quad_canonicalize(ns)
print("oracle frame (canonical indices):", lab.frame)
print("hemisphere-isolated pair member:",
      round(float(np.rad2deg(ns.angles[lab.u3_role]))), "deg")


def ask(g_frame, **kw):
    g = np.zeros(4)
    for pos, canon in enumerate(lab.frame):
        g[canon] = g_frame[pos]
    return trapezoid_membership(lab, g, **kw)


cases = [
    ("light pair", [0.10, 0.40, 0.10, 0.40]),
    ("heavy pair, square root holds", [0.1464466, 0.2071068, 0.3535534, 0.2928932]),
    ("heavy pair, square root fails", [0.35, 0.10, 0.45, 0.10]),
    ("wrong orientation", [0.45, 0.225, 0.10, 0.225]),
]
for name, g in cases:
    print(f"  {name}: member={ask(np.asarray(g) / sum(g))}")

# The closure flag relaxes the strict inequalities: boundary points of the
# closed cone-volume set are then accepted.
boundary = [0.25, 0.25, 0.25, 0.25]
print("\nbalanced boundary point: strict:", ask(boundary),
      " closure:", ask(boundary, closure=True))

square = validate_normals([0.0, 90.0, 180.0, 270.0])
plab = quad_canonicalize(square)
print("\nparallelogram pair-sum law:")
for g in ([0.25, 0.25, 0.25, 0.25], [0.3, 0.2, 0.2, 0.3], [0.3, 0.2, 0.3, 0.2]):
    print(f"  {g}: member={parallelogram_membership(plab, np.array(g))}")
