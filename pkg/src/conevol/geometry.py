"""Polygons from halfplane data and their cone-volume vectors.

A configuration is a set of m distinct outer unit normals positively spanning
the plane, together with a nonnegative right-hand side b.  The polygon is
P(U, b) = {x : <u_i, x> <= b_i for all i}; it contains the origin, and the
cone over facet i (the triangle fan from the origin) has area b_i * len_i / 2.
The vector of those cone areas is the cone-volume vector of (U, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneratePolygon,
    DuplicateNormal,
    InputError,
    InternalInvariantViolation,
    NotPositivelySpanning,
    NotUnimodular,
    NotUnit,
)

# Tolerances used throughout the package (all quantities are desk-scale
# ratios of areas, so fixed absolute epsilons are appropriate).
EPS_UNIT = 1e-9    # |norm - 1| for unit vectors
EPS_ANGLE = 1e-9   # radians; duplicate / antipode / spanning decisions
EPS_AREA = 1e-12   # area below which a polygon counts as degenerate
EPS_SUM = 1e-9     # sum-to-one and halfspace slack comparisons
EPS_DET = 1e-12    # |.|det| - 1| for unimodular transforms

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class NormalSet:
    """Validated outer normals, stored counterclockwise by angle.

    vectors      (m, 2) unit vectors, read-only
    angles       (m,) radians in [0, 2*pi), strictly increasing
    input_order  permutation: canonical slot k holds raw entry input_order[k]
    """

    vectors: np.ndarray
    angles: np.ndarray
    input_order: np.ndarray

    @property
    def m(self) -> int:
        return len(self.angles)

    def antipode(self, i: int) -> int | None:
        """Index j with u_j = -u_i, or None if the antipode is absent."""
        target = (self.angles[i] + math.pi) % TWO_PI
        diff = np.abs(self.angles - target)
        diff = np.minimum(diff, TWO_PI - diff)
        j = int(np.argmin(diff))
        return j if diff[j] < EPS_ANGLE else None

    def antipodal_pairs(self) -> list[tuple[int, int]]:
        """All index pairs (i, j), i < j, with u_j = -u_i."""
        pairs = []
        for i in range(self.m):
            j = self.antipode(i)
            if j is not None and i < j:
                pairs.append((i, j))
        return pairs

    def to_input(self, values):
        """Reorder a canonical-order sequence back to the raw input order."""
        values = np.asarray(values)
        out = np.empty_like(values)
        out[self.input_order] = values
        return out

    def to_canonical(self, values):
        """Reorder a raw-input-order sequence into canonical order."""
        return np.asarray(values)[self.input_order]


@dataclass(frozen=True, eq=False)
class Polygon2D:
    """Convex polygon with per-edge supporting-constraint bookkeeping.

    vertices      (k, 2) counterclockwise; empty when degenerate
    facet_of      (k,) constraint index supporting edge j = vertices[j] -> vertices[j+1]
    facet_length  (m,) edge length per constraint, 0 when inactive
    """

    vertices: np.ndarray
    facet_of: np.ndarray
    facet_length: np.ndarray
    area: float
    degenerate: bool


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """Discrete measure on the circle: positive weight per outer normal."""

    normals: NormalSet
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (self.normals.m,):
            raise InputError(
                f"weights have length {w.shape}, expected ({self.normals.m},)")
        if np.any(w <= 0):
            raise InputError("measure weights must be strictly positive")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def validate_normals(raw) -> NormalSet:
    """Build a canonical NormalSet from 2D points or angles in degrees.

    Scalar entries are interpreted as angles in degrees.  Raises NotUnit,
    DuplicateNormal or NotPositivelySpanning when the data cannot define a
    bounded polygon configuration.
    """
    arr = np.asarray(raw, dtype=float)
    if arr.ndim == 1:
        angles = np.deg2rad(arr) % TWO_PI
        vectors = np.column_stack([np.cos(angles), np.sin(angles)])
    elif arr.ndim == 2 and arr.shape[1] == 2:
        norms = np.linalg.norm(arr, axis=1)
        bad = np.abs(norms - 1.0) > EPS_UNIT
        if np.any(bad):
            i = int(np.argmax(bad))
            raise NotUnit(f"normal {i} has norm {norms[i]:.12g}, expected 1")
        vectors = arr / norms[:, None]
        angles = np.arctan2(vectors[:, 1], vectors[:, 0]) % TWO_PI
    else:
        raise InputError("expected a list of 2D points or of angles in degrees")

    m = len(angles)
    if m < 3:
        raise NotPositivelySpanning(f"{m} normals cannot positively span the plane")

    order = np.argsort(angles, kind="stable")
    angles = angles[order]
    vectors = vectors[order]

    gaps = np.diff(angles, append=angles[0] + TWO_PI)
    if np.any(gaps <= EPS_ANGLE):
        i = int(np.argmin(gaps))
        raise DuplicateNormal(
            f"normals at angles {angles[i]:.12g} and {angles[(i + 1) % m]:.12g} coincide")
    worst = float(np.max(gaps))
    if worst >= math.pi - EPS_ANGLE:
        raise NotPositivelySpanning(
            f"maximal angular gap {worst:.12g} rad is not strictly below pi")

    return NormalSet(_freeze(np.ascontiguousarray(vectors)),
                     _freeze(angles),
                     _freeze(order))


def as_support_vector(normals: NormalSet, b) -> np.ndarray:
    """Validate a right-hand side: length m, entrywise >= 0."""
    b = np.asarray(b, dtype=float)
    if b.shape != (normals.m,):
        raise InputError(f"b has shape {b.shape}, expected ({normals.m},)")
    if np.any(b < 0) or not np.all(np.isfinite(b)):
        raise InputError("support vector entries must be finite and >= 0")
    return b


def _bounding_radius(normals: NormalSet, b: np.ndarray) -> float:
    # Any x in P has <u, x> <= max(b) for a normal within half the largest
    # angular gap of x's direction, so |x| <= max(b) / cos(gap / 2).
    gaps = np.diff(normals.angles, append=normals.angles[0] + TWO_PI)
    cos_half = math.cos(float(np.max(gaps)) / 2.0)
    return float(np.max(b, initial=0.0)) / max(cos_half, 1e-9) * 1.5 + 1.0


def _clip(points, tags, u, c, idx, tol):
    """Clip a convex ccw polygon by <u, x> <= c, tagging new edges with idx."""
    s = c - points @ u
    if np.all(s >= -tol):
        return points, tags
    if np.all(s <= tol):
        return points[:0], tags[:0]
    n = len(points)
    out_pts, out_tags = [], []
    for k in range(n):
        k2 = (k + 1) % n
        sk, s2 = s[k], s[k2]
        if sk >= -tol:
            out_pts.append(points[k])
            out_tags.append(tags[k])
            if s2 < -tol:
                if sk > tol:
                    t = sk / (sk - s2)
                    out_pts.append(points[k] + t * (points[k2] - points[k]))
                    out_tags.append(idx)
                else:
                    # vertex sits on the clip line; its outgoing edge is replaced
                    out_tags[-1] = idx
        elif s2 > tol:
            t = sk / (sk - s2)
            out_pts.append(points[k] + t * (points[k2] - points[k]))
            out_tags.append(tags[k])
    return np.array(out_pts), np.array(out_tags, dtype=int)


def _merge_close(points, tags, tol):
    """Drop zero-length edges produced by clipping through vertices."""
    n = len(points)
    if n == 0:
        return points, tags
    keep = np.ones(n, dtype=bool)
    for k in range(n):
        if np.linalg.norm(points[k] - points[(k + 1) % n]) <= tol:
            keep[k] = False  # outgoing edge of k is the surviving one of k+1
    return points[keep], tags[keep]


def _shoelace(points: np.ndarray) -> float:
    if len(points) < 3:
        return 0.0
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def intersect_halfplanes(normals: NormalSet, b) -> Polygon2D:
    """Exact vertex form of the polygon P(U, b).

    Starts from a box guaranteed to contain the (bounded) intersection and
    clips one halfplane at a time.  Constraints supporting no edge are
    inactive; a numerically empty interior yields a flagged degenerate
    result rather than an exception (b with zeros is legal input).
    """
    b = as_support_vector(normals, b)
    r = _bounding_radius(normals, b)
    points = np.array([[r, -r], [r, r], [-r, r], [-r, -r]])
    tags = np.full(4, -1, dtype=int)
    tol = 1e-12 * (1.0 + r)
    for i in range(normals.m):
        points, tags = _clip(points, tags, normals.vectors[i], b[i], i, tol)
        if len(points) < 3:
            break
    points, tags = _merge_close(points, tags, tol)

    m = normals.m
    area = _shoelace(points)
    if len(points) < 3 or area <= EPS_AREA:
        empty = np.zeros((0, 2))
        return Polygon2D(_freeze(empty), _freeze(np.zeros(0, dtype=int)),
                         _freeze(np.zeros(m)), max(area, 0.0), True)
    if np.any(tags < 0):
        raise InternalInvariantViolation("bounding box edge survived clipping")

    lengths = np.zeros(m)
    edge_vec = np.roll(points, -1, axis=0) - points
    np.add.at(lengths, tags, np.linalg.norm(edge_vec, axis=1))
    return Polygon2D(_freeze(points), _freeze(tags), _freeze(lengths), area, False)


def cone_volume_vector(normals: NormalSet, b, polygon: Polygon2D | None = None) -> np.ndarray:
    """Cone areas (b_i * len_i / 2) per constraint; zeros when degenerate."""
    b = as_support_vector(normals, b)
    if polygon is None:
        polygon = intersect_halfplanes(normals, b)
    if polygon.degenerate:
        return np.zeros(normals.m)
    return 0.5 * b * polygon.facet_length


def polygon_area(normals: NormalSet, b) -> float:
    return intersect_halfplanes(normals, b).area


def normalize_to_unit_area(normals: NormalSet, b) -> np.ndarray:
    """Scale b so that P(U, b) has area 1; the cone volumes scale by 1/area."""
    b = as_support_vector(normals, b)
    area = intersect_halfplanes(normals, b).area
    if area <= EPS_AREA:
        raise DegeneratePolygon(f"polygon area {area:.3g} is numerically zero")
    return b / math.sqrt(area)


def transform_unimodular(normals: NormalSet, b, matrix) -> tuple[NormalSet, np.ndarray]:
    """Image configuration of P(U, b) under an area-preserving linear map.

    The image polygon A*P has outer normals inv(A).T @ u_i, renormalized to
    unit length, with supports scaled by the same factor; cone volumes are
    preserved up to the angle re-sort (use the returned NormalSet's
    input_order to match indices).
    """
    b = as_support_vector(normals, b)
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (2, 2):
        raise InputError("transform matrix must be 2x2")
    det = float(np.linalg.det(matrix))
    if abs(abs(det) - 1.0) > EPS_DET:
        raise NotUnimodular(f"|det| = {abs(det):.12g}, expected 1")
    cofactor = np.linalg.inv(matrix).T
    images = normals.vectors @ cofactor.T
    scale = np.linalg.norm(images, axis=1)
    new_normals = validate_normals(images / scale[:, None])
    new_b = new_normals.to_canonical(b / scale)
    return new_normals, new_b


# ---------------------------------------------------------------------------
# Vectorized cone volumes for batches of right-hand sides.
#
# Every polygon vertex is the intersection of two constraint lines, and for a
# fixed normal set those intersections are linear in b.  Evaluating all
# pairwise candidates and filtering by feasibility gives facet endpoints
# without any per-row clipping, which is what the sampling and solver loops
# need.  Agreement with intersect_halfplanes is covered by tests.
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class _PairTables:
    pair_i: np.ndarray     # (p,) first constraint of each candidate pair
    pair_j: np.ndarray     # (p,)
    solves: np.ndarray     # (p, 2, 2): x = solves[p] @ (b_i, b_j)
    on_line: list          # per constraint: candidate-pair ids touching it
    tangents: np.ndarray   # (m, 2) ccw edge directions


def _pair_tables(normals: NormalSet) -> _PairTables:
    cached = getattr(normals, "_pair_tables_cache", None)
    if cached is not None:
        return cached
    u = normals.vectors
    m = normals.m
    pi, pj, solves = [], [], []
    for i in range(m):
        for j in range(i + 1, m):
            det = u[i, 0] * u[j, 1] - u[i, 1] * u[j, 0]
            if abs(det) < 0.5 * EPS_ANGLE:
                continue  # (anti)parallel lines never meet
            pi.append(i)
            pj.append(j)
            solves.append(np.array([[u[j, 1], -u[i, 1]],
                                    [-u[j, 0], u[i, 0]]]) / det)
    pair_i = np.array(pi, dtype=int)
    pair_j = np.array(pj, dtype=int)
    on_line = [np.flatnonzero((pair_i == k) | (pair_j == k)) for k in range(m)]
    tangents = np.column_stack([-u[:, 1], u[:, 0]])
    tables = _PairTables(pair_i, pair_j, np.array(solves), on_line, tangents)
    object.__setattr__(normals, "_pair_tables_cache", tables)  # idempotent
    return tables


def cone_volumes_batch(normals: NormalSet, batch) -> tuple[np.ndarray, np.ndarray]:
    """Cone-volume vectors and areas for a batch of right-hand sides.

    batch is (n, m) with entries >= 0; returns (gammas (n, m), areas (n,)).
    Degenerate rows come back with zero gamma and area.
    """
    batch = np.asarray(batch, dtype=float)
    if batch.ndim == 1:
        batch = batch[None, :]
    n, m = batch.shape
    if m != normals.m:
        raise InputError(f"batch has {m} columns, expected {normals.m}")
    t = _pair_tables(normals)
    p = len(t.pair_i)
    tol = 1e-10 * (1.0 + np.max(batch, axis=1))        # (n,)

    rhs = np.stack([batch[:, t.pair_i], batch[:, t.pair_j]], axis=2)  # (n, p, 2)
    cand = np.einsum("pab,npb->npa", t.solves, rhs)                   # (n, p, 2)
    slack = np.einsum("npa,ma->npm", cand, normals.vectors) - batch[:, None, :]
    feasible = np.all(slack <= tol[:, None, None], axis=2)            # (n, p)

    gammas = np.zeros((n, m))
    for k in range(m):
        ids = t.on_line[k]
        if len(ids) < 2:
            continue
        s = cand[:, ids, :] @ t.tangents[k]                           # (n, q)
        ok = feasible[:, ids]
        smin = np.min(np.where(ok, s, np.inf), axis=1)
        smax = np.max(np.where(ok, s, -np.inf), axis=1)
        length = np.clip(smax - smin, 0.0, None)
        length[~np.isfinite(length)] = 0.0
        gammas[:, k] = 0.5 * batch[:, k] * length
    areas = gammas.sum(axis=1)
    bad = areas <= EPS_AREA
    gammas[bad] = 0.0
    areas[bad] = 0.0
    return gammas, areas
