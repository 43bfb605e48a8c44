"""Two polytopes in the simplex slice of R^m.

The concentration polytope bounds every antipodal pair's total weight by one
half.  The cone-volume hull is the closure of the convex hull of all
unit-area cone-volume vectors; its vertices are unit vectors for
triangle-capable normals and pair midpoints for trapezoid-only ones.  The
hull's halfspace description is redundant by design, and the facet filter
recovers the minimal one.
"""

import numpy as np

from conevol import (
    classify,
    contains,
    enumerate_vertices,
    hull_halfspaces,
    hull_vertices,
    irredundant_facets,
    pscc_vertices,
    structure_predicates,
    validate_normals,
)

ns = validate_normals([90.0, 180.0, 270.0, 45.0])
cls = classify(ns)

print("concentration polytope vertices (pair midpoints):")
print(pscc_vertices(ns))

print("\ncone-volume hull vertices:")
verts = hull_vertices(ns, cls)
print(verts)

rep = hull_halfspaces(ns, cls)
print(f"\nhull halfspaces as emitted: {len(rep.halfspaces)} "
      f"(plus the hyperplane sum(x) = 1)")
irr = irredundant_facets(rep)
print(f"facet-defining ones: {len(irr.halfspaces)}")
for h in irr.halfspaces:
    print("   ", h.normal, "<=", h.rhs)

# Every concentration-polytope vertex lies inside the hull.
print("\nconcentration polytope sits inside the hull:",
      all(contains(rep, v) for v in pscc_vertices(ns)))

# Brute-force vertex enumeration of the halfspace form agrees with the
# formula-driven vertex list.
ev = enumerate_vertices(rep)
print("enumeration recovers the same vertices:",
      np.allclose(ev, verts[np.lexsort(verts.T[::-1])]))

print("\nshape predicates by fixture:")
for name, angles in [("axis square", [0, 90, 180, 270]),
                     ("pentagon", [10, 100, 170, 260, 300]),
                     ("trapezoid", [90, 180, 270, 45])]:
    print(f"  {name}: {structure_predicates(validate_normals(angles))}")
