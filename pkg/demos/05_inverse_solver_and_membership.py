"""Inverting the cone-volume map, and the layered membership pipeline.

Given target weights, the solver looks for supports b of a unit-area
polygon whose cone volumes match.  The decision pipeline wraps it with the
cheap certificates: the hull test (necessary), the quadrilateral oracles
(exact), and two sufficient conditions from the literature.
"""

import numpy as np

from conevol import SolveOptions, decide_membership, solve, validate_normals
from conevol.geometry import cone_volume_vector, intersect_halfplanes

square = validate_normals([0.0, 90.0, 180.0, 270.0])
res = solve(square, np.array([0.3, 0.2, 0.2, 0.3]), SolveOptions(seed=1))
print("solve on the axis square:", res.status,
      f"residual {res.residual:.2e} after {res.iterations} iterations")
print("  witness b:", np.round(res.b, 6))
poly = intersect_halfplanes(square, res.b)
print("  recomputed cone volumes:",
      np.round(cone_volume_vector(square, res.b, poly) / poly.area, 6))

trap = validate_normals([90.0, 180.0, 270.0, 45.0])
bad = trap.to_canonical([0.35, 0.10, 0.45, 0.10])
res = solve(trap, bad, SolveOptions(seed=1))
print("\nsolve on an impossible target:", res.status,
      f"(best residual {res.residual:.3f}, bounded away from zero)")

print("\nmembership pipeline:")
cases = [
    ("trapezoid, outside the hull", trap, trap.to_canonical([0.6, 0.2, 0.1, 0.1])),
    ("trapezoid, light pair", trap, trap.to_canonical([0.1, 0.4, 0.1, 0.4])),
    ("square, balanced pairs", square, np.array([0.3, 0.2, 0.2, 0.3])),
    ("square, unbalanced pairs", square, np.array([0.3, 0.2, 0.3, 0.2])),
    ("hexagon, uniform", validate_normals([0, 60, 120, 180, 240, 300]),
     np.full(6, 1 / 6)),
    ("pentagon, positive", validate_normals([10, 100, 170, 260, 300]),
     np.full(5, 0.2)),
]
for name, ns, g in cases:
    v = decide_membership(ns, g, SolveOptions(seed=1))
    print(f"  {name}: {v.verdict}  ({v.citation})")

# A case no certificate covers: five normals with a heavy antipodal pair.
ns = validate_normals([0.0, 45.0, 90.0, 180.0, 270.0])
rng = np.random.default_rng(2)
from conevol.geometry import cone_volumes_batch
while True:
    b = rng.uniform(0.05, 1.0, 5)
    g, a = cone_volumes_batch(ns, b)
    g = g[0] / a[0]
    pair = ns.antipodal_pairs()[0]
    if a[0] > 1e-9 and g[pair[0]] + g[pair[1]] > 0.55 and np.min(g) > 1e-3:
        break
v = decide_membership(ns, g, SolveOptions(seed=1))
print(f"  five normals, heavy pair: {v.verdict}  "
      f"(residual {v.residual:.1e}, witness found by the solver)")
