"""Numerical inversion of the cone-volume map and the membership pipeline.

Given normals U and a normalized target gamma, solve() searches for b >= 0
with unit polygon area whose cone-volume vector matches gamma.  The search
minimizes the log functional sum(gamma_i log b_i) over unit-area polygons
after maximizing it over origin translations; stationary points of that
min-max are exactly the solutions.  A damped least-squares polish drives the
residual to tolerance, and seeded restarts make the whole search
deterministic.  decide_membership() layers the known necessary and
sufficient conditions around the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import classify, is_general_position
from .errors import DegeneratePolygon, InvalidTarget
from .geometry import (
    EPS_AREA,
    EPS_SUM,
    NormalSet,
    as_support_vector,
    cone_volume_vector,
    cone_volumes_batch,
    intersect_halfplanes,
    validate_normals,
)
from .polytopes import contains, hull_halfspaces, pscc_halfspaces
from .quad import (
    parallelogram_membership,
    quad_canonicalize,
    trapezoid_boundary_margin,
    trapezoid_membership,
)

RATIO_CAP = 1e8          # max/min spread of b before a restart is abandoned
ZERO_WEIGHT = 1e-15      # target entries at or below this count as zero


@dataclass(frozen=True)
class SolveOptions:
    tol: float = 1e-8
    max_iters: int = 5000
    restarts: int = 8
    step0: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.tol <= 0 or self.max_iters < 1 or self.restarts < 1:
            raise InvalidTarget("tol must be > 0, max_iters and restarts >= 1")


@dataclass(frozen=True, eq=False)
class SolveResult:
    status: str                      # Solved | ResidualFloor | Degenerated
    b: np.ndarray
    residual: float
    iterations: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "b": [float(x) for x in self.b],
            "residual": float(self.residual),
            "iterations": int(self.iterations),
        }


@dataclass(frozen=True, eq=False)
class MembershipVerdict:
    verdict: str
    citation: str
    witness: np.ndarray | None = None
    residual: float | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "citation": self.citation}
        if self.witness is not None:
            out["witness"] = [float(x) for x in self.witness]
        if self.residual is not None:
            out["residual"] = float(self.residual)
        return out


def volume_gradient(normals: NormalSet, b) -> np.ndarray:
    """Derivative of polygon area in each support value: the facet lengths."""
    b = as_support_vector(normals, b)
    poly = intersect_halfplanes(normals, b)
    if poly.degenerate:
        raise DegeneratePolygon("area gradient undefined for a degenerate polygon")
    return np.array(poly.facet_length)


def check_target(normals: NormalSet, gamma) -> np.ndarray:
    """Validate a membership/solve target: >= 0, sums to 1."""
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (normals.m,) or not np.all(np.isfinite(gamma)):
        raise InvalidTarget(f"target has shape {gamma.shape}, expected ({normals.m},)")
    if np.any(gamma < -EPS_SUM) or abs(float(gamma.sum()) - 1.0) > EPS_SUM:
        raise InvalidTarget("target must be >= 0 and sum to 1")
    return np.clip(gamma, 0.0, None)


# -- core iteration ---------------------------------------------------------

def _translate_basis(normals: NormalSet, pinned: np.ndarray) -> np.ndarray:
    """Directions t with <u_i, t> = 0 for pinned i (origin must stay on them)."""
    if not np.any(pinned):
        return np.eye(2)
    pins = normals.vectors[pinned]
    _, s, vt = np.linalg.svd(pins)
    null = vt[np.sum(s > 1e-12):]
    return null.reshape(-1, 2)


def _translate_max(normals: NormalSet, b, gt, basis, iters: int = 40):
    """Shift the origin to maximize sum(gt_i log b_i); concave in the shift.

    The shift lives in the null space of the pinned normals, so supports
    pinned at zero stay zero (re-snapped exactly after the arithmetic).
    """
    if basis.shape[0] == 0:
        return b
    pos = gt > 0
    v = normals.vectors[pos] @ basis.T      # (p, k)
    g = gt[pos]
    t = np.zeros(basis.shape[0])
    for _ in range(iters):
        bb = b[pos] + v @ t
        if np.any(bb <= 0):
            return None
        grad = v.T @ (g / bb)
        hess = -(v * (g / bb ** 2)[:, None]).T @ v
        try:
            step = np.linalg.solve(hess, -grad)
        except np.linalg.LinAlgError:
            break
        alpha = 1.0
        for _ in range(60):
            if np.all(b[pos] + v @ (t + alpha * step) > 0):
                break
            alpha *= 0.5
        else:
            break
        t = t + alpha * step
        if float(np.linalg.norm(grad)) < 1e-13:
            break
    out = b + normals.vectors @ (basis.T @ t)
    out[gt <= 0] = np.where(b[gt <= 0] == 0.0, 0.0, out[gt <= 0])
    return out


def _state(normals: NormalSet, b, gt):
    """(normalized gamma, area, merit) or None when degenerate/invalid."""
    pos = gt > 0
    if np.any(b[pos] <= 0) or np.any(b < 0):
        return None
    g, a = cone_volumes_batch(normals, b)
    g, a = g[0], float(a[0])
    if a <= EPS_AREA:
        return None
    merit = float(np.dot(gt[pos], np.log(b[pos])) - 0.5 * math.log(a))
    return g / a, a, merit


def _lm_polish(normals: NormalSet, gt, b, free, tol, budget: int = 60):
    """Damped least-squares on log b over the free coordinates."""
    theta = np.log(b[free])
    lam = 1e-3
    def ghat_of(th):
        bb = b.copy()
        bb[free] = np.exp(np.clip(th, -60.0, 60.0))
        g, a = cone_volumes_batch(normals, bb)
        if a[0] <= EPS_AREA:
            return None, bb
        return g[0] / a[0], bb
    ghat, bb = ghat_of(theta)
    if ghat is None:
        return b, np.inf, 0
    best_b, best_res = bb, float(np.max(np.abs(ghat - gt)))
    used = 0
    nf = int(np.sum(free))
    for it in range(budget):
        used = it + 1
        r = ghat - gt
        if float(np.max(np.abs(r))) <= tol:
            break
        jac = np.empty((normals.m, nf))
        h = 1e-6
        for c in range(nf):
            th2 = theta.copy()
            th2[c] += h
            g2, _ = ghat_of(th2)
            if g2 is None:
                jac[:, c] = 0.0
            else:
                jac[:, c] = (g2 - ghat) / h
        jtj = jac.T @ jac
        jtr = jac.T @ r
        stepped = False
        for _ in range(25):
            try:
                delta = np.linalg.solve(jtj + lam * np.eye(nf), -jtr)
            except np.linalg.LinAlgError:
                break
            g2, b2 = ghat_of(theta + delta)
            if g2 is not None:
                res2 = float(np.max(np.abs(g2 - gt)))
                if res2 < best_res:
                    theta = theta + delta
                    ghat = g2
                    best_b, best_res = b2, res2
                    lam = max(lam / 3.0, 1e-12)
                    stepped = True
                    break
            lam *= 4.0
        if not stepped:
            break
    return best_b, best_res, used


def _solve_config(normals: NormalSet, gt, opts: SolveOptions, config_id: int):
    """Run all restarts on one (possibly pinned) configuration."""
    pinned = gt <= ZERO_WEIGHT
    free = ~pinned
    basis = _translate_basis(normals, pinned)
    best = (np.inf, None, 0)

    for restart in range(opts.restarts):
        rng = np.random.default_rng([opts.seed, config_id, restart])
        b = np.where(free, rng.uniform(0.5, 1.5, normals.m), 0.0)
        shifted = _translate_max(normals, b, gt, basis)
        st = _state(normals, shifted, gt) if shifted is not None else None
        if st is None:
            continue
        b = shifted
        ghat, area, merit = st
        b = b / math.sqrt(area)
        eta = opts.step0
        iters = 0
        res = float(np.max(np.abs(ghat - gt)))
        local_best = (res, b.copy())
        last_gain = 0

        while iters < opts.max_iters:
            iters += 1
            r = ghat - gt
            res = float(np.max(np.abs(r)))
            if res < 0.97 * local_best[0]:
                last_gain = iters
            if res < local_best[0]:
                local_best = (res, b.copy())
            if res <= opts.tol:
                break
            if iters - last_gain > 60:
                break  # stalled; the least-squares polish takes over
            moved = False
            for _ in range(40):
                cand = b * np.exp(eta * r)
                cand = _translate_max(normals, cand, gt, basis)
                st = _state(normals, cand, gt) if cand is not None else None
                if st is not None and st[2] <= merit + 1e-12:
                    ghat, area, merit = st
                    b = cand / math.sqrt(area)
                    eta = min(eta * 1.3, 20.0)
                    moved = True
                    break
                eta *= 0.5
            if not moved:
                break
            bf = b[free]
            if float(np.max(bf)) > RATIO_CAP * float(np.min(bf)):
                break

        res, b = local_best
        if res > opts.tol and res < 0.5:
            b2, res2, used = _lm_polish(normals, gt, b, free, opts.tol)
            iters += used
            if res2 < res:
                res, b = res2, b2

        st = _state(normals, b, gt)
        if st is not None:
            b = b / math.sqrt(st[1])
        if res < best[0]:
            best = (res, b, iters)
        if res <= opts.tol:
            break
    return best


def solve(normals: NormalSet, gamma, opts: SolveOptions | None = None) -> SolveResult:
    """Search for b >= 0 with unit area and cone-volume vector gamma.

    Zero target entries are handled two ways and the better result wins:
    dropping those normals when the rest still positively spans (the facet is
    then re-attached touching the solved polygon), or pinning their supports
    to zero so the facet passes through the origin.  Reports Solved only
    when an independently recomputed residual meets the tolerance; otherwise
    ResidualFloor with the best residual, or Degenerated when no
    configuration admits a polygon at all.
    """
    opts = opts or SolveOptions()
    gt = check_target(normals, gamma)
    zero = np.flatnonzero(gt <= ZERO_WEIGHT)

    attempts = []
    if len(zero) == 0:
        attempts.append(("direct", None))
    else:
        keep = np.flatnonzero(gt > ZERO_WEIGHT)
        if len(keep) >= 3:
            try:
                sub = validate_normals(normals.vectors[keep])
                if np.array_equal(sub.input_order, np.arange(len(keep))):
                    attempts.append(("drop", (sub, keep)))
            except Exception:
                pass
        attempts.append(("pin", None))

    best = (np.inf, None, 0)
    for config_id, (kind, payload) in enumerate(attempts):
        if kind == "direct" or kind == "pin":
            res, b, iters = _solve_config(normals, gt, opts, config_id)
        else:
            sub, keep = payload
            res, b_sub, iters = _solve_config(sub, gt[keep], opts, config_id)
            if b_sub is None:
                continue
            poly = intersect_halfplanes(sub, b_sub)
            if poly.degenerate:
                continue
            b = np.zeros(normals.m)
            b[keep] = b_sub
            drop = np.setdiff1d(np.arange(normals.m), keep)
            b[drop] = np.max(poly.vertices @ normals.vectors[drop].T, axis=0)
            res = _verify_residual(normals, b, gt)
        if b is not None and res < best[0]:
            best = (res, b, iters)
        if res <= opts.tol:
            break

    res, b, iters = best
    if b is None:
        return SolveResult("Degenerated", np.zeros(normals.m), 1.0, 0)

    checked = _verify_residual(normals, b, gt)
    poly = intersect_halfplanes(normals, b)
    unit_ok = (not poly.degenerate) and abs(poly.area - 1.0) <= EPS_SUM
    if checked <= opts.tol and unit_ok:
        return SolveResult("Solved", b, checked, iters)
    return SolveResult("ResidualFloor", b, min(res, checked), iters)


def _verify_residual(normals: NormalSet, b, gt) -> float:
    """Residual recomputed through the scalar clipping path (independent of
    the batched evaluator the optimizer uses)."""
    poly = intersect_halfplanes(normals, b)
    if poly.degenerate:
        return np.inf
    ghat = cone_volume_vector(normals, b, poly) / poly.area
    return float(np.max(np.abs(ghat - gt)))


# -- membership pipeline ----------------------------------------------------

def decide_membership(normals: NormalSet, gamma,
                      opts: SolveOptions | None = None,
                      closure: bool = False,
                      hull_eps: float = 1e-9) -> MembershipVerdict:
    """Layered decision: necessary hull test, exact quadrilateral oracles,
    cited sufficient conditions, then the numerical solver.

    Order: (1) outside the cone-volume hull is a definite no; (2) four
    normals with an antipodal pair go to the exact oracle; (3) pairwise
    independent normals with positive weights always work; (4) strict
    interior of the concentration polytope always works; (5) more than four
    normals with every antipodal pair strictly light always works; (6)
    otherwise the solver decides or reports Unknown.
    """
    opts = opts or SolveOptions()
    gt = check_target(normals, gamma)
    cls = classify(normals)

    hull = hull_halfspaces(normals, cls)
    if not contains(hull, gt, eps=hull_eps):
        return MembershipVerdict("NoOutsideHull",
                                 "violates a halfspace of the cone-volume hull")

    pairs = normals.antipodal_pairs()
    if normals.m == 4 and pairs:
        labeling = quad_canonicalize(normals, cls)
        if labeling.is_parallelogram:
            if parallelogram_membership(labeling, gt):
                u0, u1 = normals.vectors[0], normals.vectors[1]
                s = abs(float(u0[0] * u1[1] - u0[1] * u1[0]))
                witness = 2.0 * math.sqrt(s) * gt
                return MembershipVerdict("YesExactOracle",
                                         "parallelogram pair-sum law",
                                         witness=witness)
            return MembershipVerdict("NoExactOracle",
                                     "parallelogram pair sums differ from 1/2")
        if trapezoid_membership(labeling, gt, closure=closure):
            return MembershipVerdict("YesExactOracle", "trapezoid conditions")
        boundary = (not closure
                    and trapezoid_membership(labeling, gt, closure=True)
                    and trapezoid_boundary_margin(labeling, gt) <= opts.tol)
        if not boundary:
            return MembershipVerdict("NoExactOracle",
                                     "trapezoid conditions fail")
        # Strict and closure verdicts disagree within tolerance: the
        # combinatorial answer is unreliable here, ask the solver.

    if is_general_position(normals) and np.all(gt > 0):
        return MembershipVerdict("YesGeneralPosition",
                                 "pairwise independent normals, positive weights")

    pscc = pscc_halfspaces(normals)
    if np.all(gt > 0) and all(float(h.slack(gt)) > 0 for h in pscc.halfspaces
                              if h.rhs > 0):
        return MembershipVerdict("YesRelintPscc",
                                 "strictly inside the concentration polytope")

    if (normals.m > 4 and pairs and np.all(gt > 0)
            and all(gt[i] + gt[j] < 1.0 - gt[i] - gt[j] for i, j in pairs)):
        return MembershipVerdict("YesStancuInequality",
                                 "every antipodal pair strictly below the rest")

    result = solve(normals, gt, opts)
    if result.status == "Solved":
        return MembershipVerdict("YesSolved", "numerical solve",
                                 witness=result.b, residual=result.residual)
    return MembershipVerdict("Unknown", "no rule applied; best solver residual",
                             residual=result.residual)
