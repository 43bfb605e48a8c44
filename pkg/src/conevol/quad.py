"""Exact membership for quadrilateral normal sets with an antipodal pair.

Covers the two shapes where a closed-form answer exists: trapezoids (exactly
one antipodal pair, one member of which can only bound trapezoids) and
parallelograms (two antipodal pairs).  The trapezoid test works in a fixed
frame (u1, u2, u3, u4), counterclockwise, where u1 is the trapezoid-only
member and u3 = -u1 is isolated by an open hemisphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import ClassificationResult, classify
from .errors import (
    InputError,
    InternalInvariantViolation,
    NoAntipodalPair,
    NotNormalized,
    NotParallelogram,
    NotTrapezoid,
)
from .geometry import EPS_SUM, NormalSet


@dataclass(frozen=True, eq=False)
class QuadLabeling:
    """Role assignment for a 4-normal configuration.

    frame lists canonical indices in oracle order: for trapezoids
    (trapezoid-only member, next ccw, its antipode, last); for
    parallelograms the canonical order itself (pairs sit at (0,2), (1,3)).
    """

    antipodal_pairs: tuple[tuple[int, int], ...]
    frame: tuple[int, int, int, int]
    is_parallelogram: bool

    @property
    def u3_role(self) -> int:
        """Canonical index of the hemisphere-isolated pair member."""
        return self.frame[2]


def quad_canonicalize(normals: NormalSet,
                      classification: ClassificationResult | None = None) -> QuadLabeling:
    """Identify the antipodal structure of a 4-normal set.

    Raises NoAntipodalPair when no pair exists (the exact oracle does not
    apply; use the general membership pipeline).
    """
    if normals.m != 4:
        raise InputError(f"quad oracle needs exactly 4 normals, got {normals.m}")
    pairs = tuple(normals.antipodal_pairs())
    if not pairs:
        raise NoAntipodalPair("no antipodal pair among the four normals")
    if len(pairs) == 2:
        if pairs != ((0, 2), (1, 3)):
            raise InternalInvariantViolation(
                f"parallelogram pairs {pairs} not interleaved in ccw order")
        return QuadLabeling(pairs, (0, 1, 2, 3), True)

    cls = classification if classification is not None else classify(normals)
    if len(cls.square_indices) != 1:
        raise InternalInvariantViolation(
            "one-pair quadrilateral without exactly one trapezoid-only normal")
    i0 = next(iter(cls.square_indices))
    frame = tuple((i0 + k) % 4 for k in range(4))
    if frame[2] != cls.antipode[i0]:
        raise InternalInvariantViolation(
            "antipode of the trapezoid-only normal is not two steps away ccw")
    return QuadLabeling(pairs, frame, False)


def _check_weights(gamma) -> np.ndarray:
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (4,):
        raise NotNormalized(f"expected 4 weights, got shape {gamma.shape}")
    if np.any(gamma < -EPS_SUM) or abs(float(gamma.sum()) - 1.0) > EPS_SUM:
        raise NotNormalized("weights must be >= 0 and sum to 1")
    return np.clip(gamma, 0.0, None)


def trapezoid_membership(labeling: QuadLabeling, gamma,
                         closure: bool = False, tol: float = 0.0) -> bool:
    """Decide whether gamma is a cone-volume vector of the trapezoid family.

    gamma is in canonical normal order and gets relabeled into the oracle
    frame (g1, g2, g3, g4).  Membership holds iff either
        (i)  g1 + g3 < g2 + g4, or
        (ii) g1 + g3 >= g2 + g4 >= 2*sqrt(g1*g3) and g1 < g3.
    With closure=True the strict inequalities become weak (membership in the
    closure of the cone-volume set) and tol loosens the comparisons.

    Zero entries are decided by the same inequalities: they reproduce the
    degenerate sub-polygon geometry exactly (a facet can vanish, or persist
    with its supporting line through the origin), which direct case analysis
    of those polygons confirms.
    """
    if labeling.is_parallelogram:
        raise NotTrapezoid("labeling describes a parallelogram")
    g = _check_weights(gamma)[list(labeling.frame)]
    s13 = g[0] + g[2]
    s24 = g[1] + g[3]
    root = 2.0 * math.sqrt(g[0] * g[2])
    if closure:
        return bool(s13 <= s24 + tol
                    or (s24 >= root - tol and g[0] <= g[2] + tol))
    return bool(s13 < s24
                or (s13 >= s24 and s24 >= root and g[0] < g[2]))


def trapezoid_boundary_margin(labeling: QuadLabeling, gamma) -> float:
    """Distance of gamma from the accept/reject boundary of the oracle.

    Small values mean the strict and closure verdicts can disagree, so a
    purely combinatorial answer is not reliable in floating point.
    """
    g = _check_weights(gamma)[list(labeling.frame)]
    s13, s24 = g[0] + g[2], g[1] + g[3]
    root = 2.0 * math.sqrt(g[0] * g[2])
    margins = [abs(s13 - s24)]
    if s13 >= s24:
        margins += [abs(s24 - root), abs(g[2] - g[0])]
    return float(min(margins))


def parallelogram_membership(labeling: QuadLabeling, gamma,
                             tol: float = EPS_SUM) -> bool:
    """True iff each antipodal pair carries total weight exactly one half."""
    if not labeling.is_parallelogram:
        raise NotParallelogram("labeling does not describe a parallelogram")
    g = _check_weights(gamma)
    (i, j), (k, l) = labeling.antipodal_pairs
    return bool(abs(g[i] + g[j] - 0.5) <= tol and abs(g[k] + g[l] - 0.5) <= tol)
