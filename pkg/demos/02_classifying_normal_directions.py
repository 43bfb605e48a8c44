"""Which normals can bound a triangle, and which only ever bound trapezoids.

A normal is triangle-capable when two partners in the set positively span
the plane with it.  The leftovers are special: each has its antipode in the
set and an open half-circle meeting the set only in that antipode.  Their
count is always 0, 1, 2 or 4, and it is 4 exactly for parallelograms.
"""

import numpy as np

from conevol import classify, validate_normals


def show(name, angles):
    ns = validate_normals(angles)
    cls = classify(ns)
    deg = lambda ids: sorted(round(float(np.rad2deg(ns.angles[i]))) for i in ids)
    print(f"{name}  (angles {angles})")
    print("  triangle-capable:", deg(cls.delta_indices))
    print("  trapezoid-only:  ", deg(cls.square_indices))
    for i in sorted(cls.square_indices):
        d = cls.hemisphere_witness[i]
        print(f"    witness hemisphere for {deg([i])[0]} deg: pole "
              f"({d[0]:+.3f}, {d[1]:+.3f}), isolates its antipode")
    print("  two antipodal pairs (parallelogram):", cls.reducible)
    print()


show("trapezoid", [90, 180, 270, 45])
show("axis square", [0, 90, 180, 270])
show("general-position pentagon", [10, 100, 170, 260, 300])
show("hexagon with three pairs", [0, 60, 120, 180, 240, 300])
show("five normals, two trapezoid-only", [0, 45, 90, 180, 270])
