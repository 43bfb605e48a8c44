"""Polytopes attached to a normal set, in the simplex slice of R^m.

Two polytopes matter here: the concentration polytope (the scaled matroid
base polytope of the normals: simplex constraints plus a pair-sum bound of
one half per antipodal pair) and the cone-volume hull (the closure of the
convex hull of all unit-area cone-volume vectors).  Both come with explicit
vertex and halfspace forms; everything lives on the hyperplane sum(x) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .classify import ClassificationResult, classify
from .errors import DimensionMismatch, InputError, InternalInvariantViolation
from .geometry import EPS_SUM, NormalSet

TIGHT_EPS = 1e-9   # slack below which a constraint counts as tight at a vertex


@dataclass(frozen=True, eq=False)
class Halfspace:
    """Constraint <normal, x> <= rhs in R^m."""

    normal: np.ndarray
    rhs: float

    def __post_init__(self):
        self.normal.setflags(write=False)

    def slack(self, points) -> np.ndarray:
        return self.rhs - np.asarray(points) @ self.normal


@dataclass(frozen=True, eq=False)
class PolytopeRep:
    """Paired halfspace and vertex descriptions on the simplex hyperplane."""

    halfspaces: tuple[Halfspace, ...]
    vertices: np.ndarray          # (k, m)
    dim: int
    equality_rhs: float = 1.0

    def __post_init__(self):
        self.vertices.setflags(write=False)

    @property
    def m(self) -> int:
        return self.vertices.shape[1]

    def to_json(self) -> dict:
        return {
            "halfspaces": [{"a": list(map(float, h.normal)), "rhs": float(h.rhs)}
                           for h in self.halfspaces],
            "equality_rhs": self.equality_rhs,
            "vertices": [list(map(float, v)) for v in self.vertices],
            "dim": self.dim,
        }


def affine_rank(points: np.ndarray, tol: float = 1e-9) -> int:
    points = np.asarray(points, dtype=float)
    if len(points) <= 1:
        return 0
    diffs = points[1:] - points[0]
    if diffs.size == 0:
        return 0
    s = np.linalg.svd(diffs, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0] if len(s) else 1.0)))


def _check_rep(rep: PolytopeRep) -> PolytopeRep:
    for h in rep.halfspaces:
        if np.max(h.slack(rep.vertices) * -1.0) > EPS_SUM:
            raise InternalInvariantViolation(
                "polytope vertex violates its own halfspace form")
    sums = rep.vertices.sum(axis=1)
    if np.max(np.abs(sums - rep.equality_rhs)) > 1e-12:
        raise InternalInvariantViolation(
            "polytope vertex off the simplex hyperplane")
    return rep


def pscc_vertices(normals: NormalSet) -> np.ndarray:
    """Midpoints (e_i + e_j) / 2 over linearly independent normal pairs."""
    m = normals.m
    anti = {i: normals.antipode(i) for i in range(m)}
    rows = []
    for i, j in combinations(range(m), 2):
        if anti[i] == j:
            continue
        v = np.zeros(m)
        v[i] = v[j] = 0.5
        rows.append(v)
    return np.array(rows)


def pscc_halfspaces(normals: NormalSet) -> PolytopeRep:
    """Concentration polytope: x >= 0, sum(x) = 1, and total weight at most
    one half on every line class (an antipodal pair, or a lone normal whose
    antipode is absent).  This is the scaled base polytope of the rank-2
    matroid on the normals, matching pscc_vertices."""
    m = normals.m
    halfspaces = []
    seen = set()
    for i in range(m):
        j = normals.antipode(i)
        cls = (i,) if j is None else (min(i, j), max(i, j))
        if cls in seen:
            continue
        seen.add(cls)
        a = np.zeros(m)
        a[list(cls)] = 1.0
        halfspaces.append(Halfspace(a, 0.5))
    for i in range(m):
        a = np.zeros(m)
        a[i] = -1.0
        halfspaces.append(Halfspace(a, 0.0))
    verts = pscc_vertices(normals)
    rep = PolytopeRep(tuple(halfspaces), verts, affine_rank(verts))
    return _check_rep(rep)


def hull_halfspaces(normals: NormalSet,
                    classification: ClassificationResult | None = None) -> PolytopeRep:
    """Halfspace form of the cone-volume hull (deliberately redundant).

    Emits exactly: x_i <= 1 for triangle-capable i; x_i + x_j/2 <= 1/2 for
    trapezoid-only i with antipode j; x_i + x_k <= 1 for trapezoid-only i and
    adjacent k; x >= 0; together with sum(x) = 1.  Not every inequality is a
    facet; see irredundant_facets.
    """
    cls = classification if classification is not None else classify(normals)
    m = normals.m
    halfspaces = []
    for i in sorted(cls.delta_indices):
        a = np.zeros(m)
        a[i] = 1.0
        halfspaces.append(Halfspace(a, 1.0))
    for i in sorted(cls.square_indices):
        j = cls.antipode[i]
        a = np.zeros(m)
        a[i], a[j] = 1.0, 0.5
        halfspaces.append(Halfspace(a, 0.5))
    for i in sorted(cls.square_indices):
        for k in sorted(cls.adjacency[i]):
            a = np.zeros(m)
            a[i] = a[k] = 1.0
            halfspaces.append(Halfspace(a, 1.0))
    for i in range(m):
        a = np.zeros(m)
        a[i] = -1.0
        halfspaces.append(Halfspace(a, 0.0))
    verts = hull_vertices(normals, cls)
    rep = PolytopeRep(tuple(halfspaces), verts, affine_rank(verts))
    return _check_rep(rep)


def hull_vertices(normals: NormalSet,
                  classification: ClassificationResult | None = None) -> np.ndarray:
    """Vertices of the cone-volume hull.

    Unit vectors e_i for triangle-capable normals; midpoints (e_i + e_j) / 2
    for trapezoid-only i and adjacent j.
    """
    cls = classification if classification is not None else classify(normals)
    m = normals.m
    rows = []
    for i in sorted(cls.delta_indices):
        v = np.zeros(m)
        v[i] = 1.0
        rows.append(v)
    seen = set()
    for i in sorted(cls.square_indices):
        for j in sorted(cls.adjacency[i]):
            key = (min(i, j), max(i, j))
            if key in seen:
                continue
            seen.add(key)
            v = np.zeros(m)
            v[i] = v[j] = 0.5
            rows.append(v)
    return np.array(rows)


def irredundant_facets(rep: PolytopeRep) -> PolytopeRep:
    """Keep exactly the halfspaces supporting facets of the vertex set.

    A halfspace survives iff its tight vertices have affine rank dim - 1;
    halfspaces tight on the same vertex set describe the same facet and are
    kept once.  Idempotent.
    """
    verts = rep.vertices
    d = affine_rank(verts)
    if d != rep.dim:
        raise DimensionMismatch(
            f"vertex set has affine rank {d}, rep declares dim {rep.dim}")
    kept, seen = [], set()
    for h in rep.halfspaces:
        tight = np.flatnonzero(np.abs(h.slack(verts)) <= TIGHT_EPS)
        if len(tight) == 0 or affine_rank(verts[tight]) != d - 1:
            continue
        key = frozenset(int(t) for t in tight)
        if key in seen:
            continue
        seen.add(key)
        kept.append(h)
    return PolytopeRep(tuple(kept), verts, rep.dim, rep.equality_rhs)


def contains(rep: PolytopeRep, x, eps: float = EPS_SUM) -> bool:
    """Point membership: on the hyperplane and inside every halfspace, within eps."""
    x = np.asarray(x, dtype=float)
    if x.shape != (rep.m,) or not np.all(np.isfinite(x)):
        raise InputError(f"point has shape {x.shape}, expected ({rep.m},)")
    if abs(float(x.sum()) - rep.equality_rhs) > eps:
        return False
    return all(float(h.slack(x)) >= -eps for h in rep.halfspaces)


def structure_predicates(normals: NormalSet,
                         classification: ClassificationResult | None = None) -> dict:
    """Shape of the hull: equals the concentration polytope iff the normals
    are two antipodal pairs; equals the full simplex iff every normal is
    triangle-capable."""
    cls = classification if classification is not None else classify(normals)
    return {
        "equals_pscc": len(cls.square_indices) == 4,
        "equals_hypersimplex": len(cls.square_indices) == 0,
    }


def enumerate_vertices(rep: PolytopeRep, eps: float = EPS_SUM) -> np.ndarray:
    """Brute-force vertex enumeration of the halfspace form (test oracle).

    Tries every (m-1)-subset of halfspaces as equalities together with the
    simplex hyperplane, keeps nondegenerate feasible solutions, dedupes.
    Exponential; intended for m <= 7.
    """
    m = rep.m
    normals = np.array([h.normal for h in rep.halfspaces])
    rhs = np.array([h.rhs for h in rep.halfspaces])
    ones = np.ones(m)

    combos = list(combinations(range(len(rep.halfspaces)), m - 1))
    mats = np.empty((len(combos), m, m))
    vecs = np.empty((len(combos), m))
    for c, combo in enumerate(combos):
        mats[c, :m - 1] = normals[list(combo)]
        mats[c, m - 1] = ones
        vecs[c, :m - 1] = rhs[list(combo)]
        vecs[c, m - 1] = rep.equality_rhs
    dets = np.abs(np.linalg.det(mats))
    ok = dets > 1e-9
    points = np.full((len(combos), m), np.nan)
    if np.any(ok):
        points[ok] = np.linalg.solve(mats[ok], vecs[ok, :, None])[:, :, 0]
    feasible = ok & np.all(points @ normals.T <= rhs + eps, axis=1)

    found: list[np.ndarray] = []
    for p in points[feasible]:
        if not any(np.max(np.abs(p - q)) <= eps for q in found):
            found.append(p)
    if not found:
        return np.zeros((0, m))
    out = np.array(found)
    return out[np.lexsort(out.T[::-1])]
