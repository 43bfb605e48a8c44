"""Polygons from support data, and the cone areas they induce.

A set of outer unit normals plus a nonnegative right-hand side b cuts out a
convex polygon containing the origin.  Fanning triangles from the origin
over each edge splits the polygon into cones; the vector of cone areas is
the central object of this library.
"""

import numpy as np

from conevol import (
    cone_volume_vector,
    intersect_halfplanes,
    normalize_to_unit_area,
    transform_unimodular,
    validate_normals,
)

# Four normals, given out of order on purpose: 90, 180, 270 and 45 degrees.
# validate_normals re-sorts counterclockwise and remembers the permutation.
ns = validate_normals([90.0, 180.0, 270.0, 45.0])
print("canonical angles (deg):", np.round(np.rad2deg(ns.angles), 1))
print("input positions of canonical slots:", ns.input_order)

b = np.ones(4)
poly = intersect_halfplanes(ns, b)
print("\npolygon vertices (ccw):")
print(np.round(poly.vertices, 6))
print("area:", poly.area, " (exactly 2*sqrt(2) + 2)")

gamma = cone_volume_vector(ns, b, poly)
print("\ncone volumes, canonical order:", np.round(gamma, 6))
print("cone volumes, input order:     ", np.round(ns.to_input(gamma), 6))
print("sum equals area:", np.isclose(gamma.sum(), poly.area))

# Scaling b by t scales every cone volume by t^2; dividing by the area is
# the same as rescaling b to make the area 1.
b_unit = normalize_to_unit_area(ns, b)
gamma_unit = cone_volume_vector(ns, b_unit)
print("\nunit-area cone volumes:", np.round(ns.to_input(gamma_unit), 5))
print("they sum to", gamma_unit.sum())

# Area-preserving linear maps leave the multiset of cone volumes alone.
shear = np.array([[1.0, 0.8], [0.0, 1.0]])
ns2, b2 = transform_unimodular(ns, b, shear)
gamma2 = cone_volume_vector(ns2, b2)
print("\nafter a shear, sorted cone volumes still:",
      np.round(np.sort(gamma2), 6))

# A zero entry in b is legal: that facet's supporting line passes through
# the origin, so its cone degenerates to zero area.
b_zero = ns.to_canonical([1.0, 1.0, 0.0, 1.0])
gamma_zero = cone_volume_vector(ns, b_zero)
print("\nwith b = 0 on one facet:", np.round(ns.to_input(gamma_zero), 6))
