"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own geometry paths:
positive spanning is decided by linear programming, polygons are rebuilt
from pairwise line intersections plus a convex hull, and areas come from
the shoelace formula on those independently computed vertices.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from conevol import validate_normals

# Fixture normal sets, given in their conventional (input) order.
TRAPEZOID_ANGLES = [90.0, 180.0, 270.0, 45.0]
SQUARE_ANGLES = [0.0, 90.0, 180.0, 270.0]
HEXAGON_ANGLES = [0.0, 60.0, 120.0, 180.0, 240.0, 300.0]
PENTAGON_GP_ANGLES = [10.0, 100.0, 170.0, 260.0, 300.0]
M5_TWO_SQUARE_ANGLES = [0.0, 45.0, 90.0, 180.0, 270.0]


def trapezoid():
    return validate_normals(TRAPEZOID_ANGLES)


def axis_square():
    return validate_normals(SQUARE_ANGLES)


def hexagon():
    return validate_normals(HEXAGON_ANGLES)


def pentagon_gp():
    return validate_normals(PENTAGON_GP_ANGLES)


def m5_two_square():
    return validate_normals(M5_TWO_SQUARE_ANGLES)


def spans_oracle(vectors) -> bool:
    """LP check: the vectors positively span iff some strictly positive
    combination sums to zero (coefficients >= 1 after scaling)."""
    vectors = np.asarray(vectors, dtype=float)
    n = len(vectors)
    if n < 3:
        return False
    res = linprog(c=np.zeros(n), A_eq=vectors.T, b_eq=np.zeros(2),
                  bounds=[(1.0, None)] * n, method="highs")
    return bool(res.status == 0)


def shoelace(points) -> float:
    points = np.asarray(points, dtype=float)
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def polygon_oracle(vectors, b, tol=1e-9):
    """Rebuild P(U, b) from pairwise line intersections and scipy's hull.

    Returns (ccw vertices, area); empty result when fewer than three
    feasible candidate points exist.
    """
    vectors = np.asarray(vectors, dtype=float)
    b = np.asarray(b, dtype=float)
    m = len(vectors)
    candidates = []
    for i in range(m):
        for j in range(i + 1, m):
            mat = np.array([vectors[i], vectors[j]])
            if abs(np.linalg.det(mat)) < 1e-12:
                continue
            x = np.linalg.solve(mat, np.array([b[i], b[j]]))
            if np.all(vectors @ x <= b + tol * (1.0 + np.abs(b).max())):
                candidates.append(x)
    if len(candidates) < 3:
        return np.zeros((0, 2)), 0.0
    pts = np.array(candidates)
    try:
        hull = ConvexHull(pts, qhull_options="QJ Pp")
    except Exception:
        return np.zeros((0, 2)), 0.0
    verts = pts[hull.vertices]
    return verts, abs(shoelace(verts))


def cone_volumes_oracle(vectors, b, tol=1e-9):
    """Cone areas by shoelace over each facet's fan triangle conv({0} u F_i)."""
    vectors = np.asarray(vectors, dtype=float)
    b = np.asarray(b, dtype=float)
    verts, _ = polygon_oracle(vectors, b, tol)
    m = len(vectors)
    gammas = np.zeros(m)
    if len(verts) < 3:
        return gammas
    scale = 1.0 + float(np.abs(b).max())
    for i in range(m):
        on_line = [v for v in verts if abs(vectors[i] @ v - b[i]) <= 1e-8 * scale]
        if len(on_line) < 2:
            continue
        tangent = np.array([-vectors[i][1], vectors[i][0]])
        s = sorted(float(tangent @ v) for v in on_line)
        p = b[i] * vectors[i] + s[0] * tangent
        q = b[i] * vectors[i] + s[-1] * tangent
        gammas[i] = abs(shoelace(np.array([[0.0, 0.0], p, q])))
    return gammas


def random_valid_angles(rng, m, min_gap_deg=2.0, max_gap_deg=175.0):
    """Rejection-sample m angles (degrees) forming a valid normal set."""
    for _ in range(10000):
        ang = np.sort(rng.uniform(0.0, 360.0, m))
        gaps = np.diff(ang, append=ang[0] + 360.0)
        if np.min(gaps) > min_gap_deg and np.max(gaps) < max_gap_deg:
            return ang
    raise RuntimeError("rejection sampling failed")


def random_normal_set(rng, m, pairs=0, min_gap_deg=2.0):
    """Random valid normal set with a requested number of antipodal pairs."""
    for _ in range(10000):
        free = m - 2 * pairs
        base = list(rng.uniform(0.0, 180.0, pairs))
        ang = []
        for a in base:
            ang += [a, a + 180.0]
        ang += list(rng.uniform(0.0, 360.0, free))
        ang = np.sort(np.asarray(ang) % 360.0)
        gaps = np.diff(ang, append=ang[0] + 360.0)
        if np.min(gaps) > min_gap_deg and np.max(gaps) < 175.0:
            return validate_normals(ang)
    raise RuntimeError("rejection sampling failed")


def isolated_square_normal_set(rng, m, min_gap_deg=4.0):
    """Random valid set where the 90-degree normal is trapezoid-only.

    All normals except its antipode sit weakly above the horizontal axis,
    so the open lower hemisphere isolates the antipode.
    """
    for _ in range(10000):
        others = np.sort(rng.uniform(0.0, 180.0, m - 2))
        ang = np.sort(np.concatenate([[90.0, 270.0], others]))
        gaps = np.diff(ang, append=ang[0] + 360.0)
        if np.min(gaps) > min_gap_deg and np.max(gaps) < 175.0:
            return validate_normals(ang)
    raise RuntimeError("rejection sampling failed")
