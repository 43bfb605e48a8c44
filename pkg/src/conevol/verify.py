"""Randomized verification of every structural law, one check per claim.

Each check runs over freshly sampled cone-volume vectors and records trial
count, pass count, and the worst violation magnitude even when everything
passes.  Reports are bit-identical across runs with the same seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import classify
from .errors import ConeVolumeError, InputError
from .geometry import NormalSet, cone_volume_vector, intersect_halfplanes, validate_normals
from .polytopes import hull_halfspaces
from .quad import parallelogram_membership, quad_canonicalize, trapezoid_membership
from .sampling import SampleBatch, sample_cone_volumes

CHECK_TOL = 1e-9
WITNESS_TOL = 1e-12


@dataclass(frozen=True)
class CheckRecord:
    name: str
    trials: int
    passes: int
    worst_violation: float

    @property
    def ok(self) -> bool:
        return self.passes == self.trials


@dataclass(frozen=True, eq=False)
class VerifyReport:
    seed: int
    count: int
    checks: tuple[CheckRecord, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "seed": int(self.seed),
            "count": int(self.count),
            "ok": self.ok,
            "checks": [{"name": c.name, "trials": c.trials, "passes": c.passes,
                        "worst_violation": float(c.worst_violation)} for c in self.checks],
        }


def _mixed_batches(normals: NormalSet, count: int, seed: int) -> list[SampleBatch]:
    subs = np.random.SeedSequence(seed).generate_state(3)
    third = count // 3
    counts = [count - 2 * third, third, third]
    dists = ["uniform01", "exp", "nearDegenerate"]
    return [sample_cone_volumes(normals, c, int(s), d)
            for c, s, d in zip(counts, subs, dists) if c > 0]


def _check_hull(normals, cls, gammas) -> CheckRecord:
    rep = hull_halfspaces(normals, cls)
    viol = np.abs(gammas.sum(axis=1) - 1.0)
    for h in rep.halfspaces:
        viol = np.maximum(viol, gammas @ h.normal - h.rhs)
    return CheckRecord("hull_containment", len(gammas),
                       int(np.sum(viol <= CHECK_TOL)), float(np.max(viol)))


def _check_square_bound(normals, cls, gammas) -> CheckRecord:
    square = sorted(cls.square_indices)
    if not square:
        return CheckRecord("square_weight_at_most_half", 0, 0, 0.0)
    viol = np.max(gammas[:, square] - 0.5, axis=1)
    return CheckRecord("square_weight_at_most_half", len(gammas),
                       int(np.sum(viol <= CHECK_TOL)), float(np.max(viol)))


def _check_antipodal_inequality(normals, cls, gammas) -> CheckRecord:
    pairs = [(i, cls.antipode[i]) for i in sorted(cls.square_indices)]
    if not pairs:
        return CheckRecord("antipodal_pair_inequality", 0, 0, 0.0)
    viol = np.full(len(gammas), -np.inf)
    for i, j in pairs:
        viol = np.maximum(viol, gammas[:, i] + 0.5 * gammas[:, j] - 0.5)
    return CheckRecord("antipodal_pair_inequality", len(gammas),
                       int(np.sum(viol <= CHECK_TOL)), float(np.max(viol)))


def facet_deletion_drop(normals: NormalSet, b, square_index: int) -> list[float]:
    """Renormalized cone-volume losses at one trapezoid-only normal after
    deleting each facet adjacent to its own, where deletion keeps the
    polyhedron bounded.  Positive values would contradict the monotonicity
    law; every normal must support a facet for the law's hypotheses to hold.
    """
    poly = intersect_halfplanes(normals, b)
    if poly.degenerate or np.any(poly.facet_length <= 1e-12):
        return []
    gamma = cone_volume_vector(normals, b, poly) / poly.area
    edges = list(poly.facet_of)
    pos = edges.index(square_index)
    k = len(edges)
    drops = []
    for adj in {edges[(pos - 1) % k], edges[(pos + 1) % k]}:
        keep = [i for i in range(normals.m) if i != adj]
        try:
            sub = validate_normals(normals.vectors[keep])
        except ConeVolumeError:
            continue  # unbounded after deletion: hypothesis fails, skip
        sub_b = np.asarray(b, dtype=float)[keep]
        sub_poly = intersect_halfplanes(sub, sub_b)
        if sub_poly.degenerate:
            continue
        new_gamma = cone_volume_vector(sub, sub_b, sub_poly) / sub_poly.area
        u_new = keep.index(square_index)
        drops.append(float(gamma[square_index] - new_gamma[u_new]))
    return drops


def _check_monotonicity(normals, cls, batches) -> CheckRecord:
    square = sorted(cls.square_indices)
    if normals.m <= 4 or not square:
        return CheckRecord("facet_deletion_monotonicity", 0, 0, 0.0)
    trials = passes = 0
    worst = -np.inf
    for batch in batches:
        for b in batch.supports:
            for i in square:
                for drop in facet_deletion_drop(normals, b, i):
                    trials += 1
                    worst = max(worst, drop)
                    if drop <= CHECK_TOL:
                        passes += 1
    return CheckRecord("facet_deletion_monotonicity", trials, passes,
                       worst if trials else 0.0)


def _check_classification(normals, cls) -> CheckRecord:
    worst = 0.0
    ok = True
    if len(cls.square_indices) not in (0, 1, 2, 4):
        ok = False
    if (len(cls.square_indices) == 4) != cls.reducible:
        ok = False
    if cls.square_indices & cls.delta_indices:
        ok = False
    if cls.square_indices | cls.delta_indices != set(range(normals.m)):
        ok = False
    for i in sorted(cls.square_indices):
        if i not in cls.antipode:
            ok = False
            continue
        d = cls.hemisphere_witness[i]
        strict = float(-normals.vectors[i] @ d)
        others = [k for k in range(normals.m) if k != cls.antipode[i]]
        weak = float(np.max(normals.vectors[others] @ d))
        worst = max(worst, weak, WITNESS_TOL - strict)
        if strict <= WITNESS_TOL or weak > WITNESS_TOL:
            ok = False
    return CheckRecord("classification_laws", 1, int(ok), worst)


def _check_quad_oracle(normals, cls, gammas) -> CheckRecord:
    if normals.m != 4 or not normals.antipodal_pairs():
        return CheckRecord("quad_oracle_agreement", 0, 0, 0.0)
    labeling = quad_canonicalize(normals, cls)
    passes = 0
    for g in gammas:
        if labeling.is_parallelogram:
            ok = parallelogram_membership(labeling, g)
        else:
            ok = trapezoid_membership(labeling, g, closure=True, tol=CHECK_TOL)
        passes += int(ok)
    worst = 0.0 if passes == len(gammas) else 1.0
    return CheckRecord("quad_oracle_agreement", len(gammas), passes, worst)


def verify_suite(normals: NormalSet, count: int, seed: int) -> VerifyReport:
    """Run every structural-law check over count sampled cone-volume vectors."""
    if count < 1:
        raise InputError("count must be >= 1")
    cls = classify(normals)
    batches = _mixed_batches(normals, count, seed)
    gammas = np.vstack([b.gammas for b in batches])
    checks = (
        _check_hull(normals, cls, gammas),
        _check_square_bound(normals, cls, gammas),
        _check_antipodal_inequality(normals, cls, gammas),
        _check_monotonicity(normals, cls, batches),
        _check_classification(normals, cls),
        _check_quad_oracle(normals, cls, gammas),
    )
    return VerifyReport(seed, count, checks)
