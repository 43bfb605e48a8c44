"""Structural classification of an outer-normal set.

Splits the normals into triangle-capable directions (those completing to a
positively spanning triple) and their complement, whose members can only
bound trapezoids: each such member has its antipode present and an open
hemisphere meeting the set exactly in that antipode.  All computations are
exhaustive polynomial scans over the definition; m stays small enough that
nothing cleverer is warranted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InternalInvariantViolation, NotSquareIndex
from .geometry import EPS_ANGLE, NormalSet, TWO_PI


def positively_spans(vectors) -> bool:
    """True iff the nonnegative hull of the given unit vectors is the plane.

    Equivalent to every cyclic gap between consecutive angles being strictly
    below pi (ties within EPS_ANGLE count as failing).
    """
    vectors = np.asarray(vectors, dtype=float)
    if vectors.ndim != 2 or len(vectors) == 0:
        return False
    angles = np.sort(np.arctan2(vectors[:, 1], vectors[:, 0]) % TWO_PI)
    gaps = np.diff(angles, append=angles[0] + TWO_PI)
    return bool(np.max(gaps) < math.pi - EPS_ANGLE)


def _angles_span(angles: np.ndarray) -> bool:
    angles = np.sort(angles)
    gaps = np.diff(angles, append=angles[0] + TWO_PI)
    return bool(np.max(gaps) < math.pi - EPS_ANGLE)


def compute_u_delta(normals: NormalSet) -> set[int]:
    """Indices whose normal completes to a positively spanning triple."""
    delta: set[int] = set()
    ang = normals.angles
    for triple in combinations(range(normals.m), 3):
        if set(triple) <= delta:
            continue
        if _angles_span(ang[list(triple)]):
            delta.update(triple)
    return delta


def compute_u_square(normals: NormalSet) -> set[int]:
    """Complement of compute_u_delta, with its structural laws asserted.

    Every member must have its antipode present and admit a hemisphere
    witness; a failure here indicates a geometry bug, not bad input.
    """
    square = set(range(normals.m)) - compute_u_delta(normals)
    for i in square:
        if normals.antipode(i) is None:
            raise InternalInvariantViolation(
                f"trapezoid-only normal {i} lacks its antipode")
        hemisphere_witness(normals, i, _checked=True)
    return square


def adjacent_set(normals: NormalSet, i: int, square: set[int] | None = None) -> set[int]:
    """Normals that pair with +-u_i into a positively spanning quadruple."""
    if square is None:
        square = compute_u_square(normals)
    if i not in square:
        raise NotSquareIndex(f"index {i} is not a trapezoid-only normal")
    anti = normals.antipode(i)
    ang = normals.angles
    base = np.array([ang[i], ang[anti]])
    out: set[int] = set()
    rest = [k for k in range(normals.m) if k not in (i, anti)]
    for k in rest:
        for l in rest:
            if l != k and _angles_span(np.concatenate([base, ang[[k, l]]])):
                out.add(k)
                break
    return out


def hemisphere_witness(normals: NormalSet, i: int, _checked: bool = False) -> np.ndarray:
    """Unit direction d with <-u_i, d> > 0 and <v, d> <= 0 for all other v.

    The open hemisphere {x : <x, d> > 0} then meets the normal set exactly
    in -u_i.  Candidates are the finitely many directions where the active
    pattern can change: -u_i itself and the perpendiculars of every member;
    the feasible candidate with the largest worst-case margin wins, ties
    going to the earliest candidate.
    """
    if not _checked:
        if i not in compute_u_square(normals):
            raise NotSquareIndex(f"index {i} is not a trapezoid-only normal")
    anti = normals.antipode(i)
    if anti is None:
        raise InternalInvariantViolation(f"normal {i} lacks its antipode")
    u = normals.vectors
    others = np.array([k for k in range(normals.m) if k != anti], dtype=int)

    candidates = [-u[i]]
    for v in u:
        candidates.append(np.array([-v[1], v[0]]))
        candidates.append(np.array([v[1], -v[0]]))

    best, best_margin = None, -np.inf
    for d in candidates:
        strict = float(-u[i] @ d)
        if strict <= 1e-12:
            continue
        slack = -(u[others] @ d)
        if np.any(slack < -1e-12):
            continue
        margin = min(strict, float(np.min(slack)))
        if margin > best_margin + 1e-15:
            best, best_margin = d, margin
    if best is None:
        raise InternalInvariantViolation(
            f"no hemisphere witness for trapezoid-only normal {i}")
    return best


def is_reducible(normals: NormalSet) -> tuple[bool, list[tuple[int, int]] | None]:
    """True iff the set is two antipodal pairs (a parallelogram).

    On True the second element is the pair partition.
    """
    pairs = normals.antipodal_pairs()
    if normals.m == 4 and len(pairs) == 2:
        return True, pairs
    return False, None


def is_general_position(normals: NormalSet) -> bool:
    """No two normals parallel; for distinct units, no antipodal pair."""
    return len(normals.antipodal_pairs()) == 0


@dataclass(frozen=True, eq=False)
class ClassificationResult:
    """Full structural classification of a normal set."""

    delta_indices: frozenset[int]
    square_indices: frozenset[int]
    adjacency: dict[int, frozenset[int]]
    antipode: dict[int, int]
    reducible: bool
    hemisphere_witness: dict[int, np.ndarray]

    def to_json(self) -> dict:
        return {
            "delta": sorted(self.delta_indices),
            "square": sorted(self.square_indices),
            "adjacency": {str(i): sorted(v) for i, v in self.adjacency.items()},
            "antipode": {str(i): j for i, j in sorted(self.antipode.items())},
            "reducible": self.reducible,
            "witness": {str(i): list(map(float, d))
                        for i, d in sorted(self.hemisphere_witness.items())},
        }


def classify(normals: NormalSet) -> ClassificationResult:
    """Compute all structural sets at once, with the cardinality law asserted."""
    delta = compute_u_delta(normals)
    square = set(range(normals.m)) - delta

    antipode = {}
    for k in range(normals.m):
        j = normals.antipode(k)
        if j is not None:
            antipode[k] = j

    adjacency, witness = {}, {}
    for i in square:
        if i not in antipode:
            raise InternalInvariantViolation(
                f"trapezoid-only normal {i} lacks its antipode")
        adjacency[i] = frozenset(adjacent_set(normals, i, square))
        witness[i] = hemisphere_witness(normals, i, _checked=True)

    reducible, _ = is_reducible(normals)
    if len(square) not in (0, 1, 2, 4):
        raise InternalInvariantViolation(
            f"|square set| = {len(square)}, expected one of 0, 1, 2, 4")
    if (len(square) == 4) != reducible:
        raise InternalInvariantViolation(
            "square set has size 4 but the set is not two antipodal pairs")

    return ClassificationResult(frozenset(delta), frozenset(square),
                                adjacency, antipode, reducible, witness)
