"""Randomized sampling of unit-area cone-volume vectors.

Draws right-hand sides from one of three families (uniform, exponential, or
uniform with one coordinate crushed by a random power of ten to probe the
hull boundary), normalizes each polygon to unit area, and returns the
cone-volume vectors.  Draw i uses its own generator seeded by (seed, i), so
results are reproducible independently of batching or evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, TooManyDegenerateDraws
from .geometry import EPS_AREA, NormalSet, cone_volumes_batch
from .polytopes import hull_vertices

DISTRIBUTIONS = ("uniform01", "exp", "nearDegenerate")
MAX_RETRIES = 64


@dataclass(frozen=True, eq=False)
class SampleBatch:
    normals: NormalSet
    gammas: np.ndarray      # (count, m), each row sums to 1
    supports: np.ndarray    # (count, m), unit-area right-hand sides
    seed: int
    dist: str

    @property
    def count(self) -> int:
        return len(self.gammas)

    def to_json(self) -> dict:
        return {
            "seed": int(self.seed),
            "dist": self.dist,
            "count": self.count,
            "gammas": [[float(x) for x in row] for row in self.gammas],
        }


def _draw(rng: np.random.Generator, m: int, dist: str) -> np.ndarray:
    if dist == "uniform01":
        return 1.0 - rng.random(m)          # (0, 1]
    if dist == "exp":
        return rng.exponential(1.0, m)
    if dist == "nearDegenerate":
        b = 1.0 - rng.random(m)
        j = int(rng.integers(m))
        k = int(rng.integers(1, 7))
        b[j] *= 10.0 ** (-k)
        return b
    raise InputError(f"unknown distribution {dist!r}; pick one of {DISTRIBUTIONS}")


def _row(seed: int, index: int, m: int, dist: str) -> tuple[np.ndarray, np.random.Generator]:
    rng = np.random.default_rng([seed, index])
    return _draw(rng, m, dist), rng


def sample_cone_volumes(normals: NormalSet, count: int, seed: int,
                        dist: str = "uniform01") -> SampleBatch:
    """Draw count normalized cone-volume vectors of the given normal set."""
    if count < 1:
        raise InputError("count must be >= 1")
    if dist not in DISTRIBUTIONS:
        raise InputError(f"unknown distribution {dist!r}; pick one of {DISTRIBUTIONS}")
    m = normals.m
    rows = np.empty((count, m))
    rngs = []
    for i in range(count):
        rows[i], rng = _row(seed, i, m, dist)
        rngs.append(rng)

    gammas, areas = cone_volumes_batch(normals, rows)
    for i in np.flatnonzero(areas <= EPS_AREA):
        rng = rngs[i]
        for _ in range(MAX_RETRIES):
            b = _draw(rng, m, dist)
            g, a = cone_volumes_batch(normals, b)
            if a[0] > EPS_AREA:
                rows[i], gammas[i], areas[i] = b, g[0], a[0]
                break
        else:
            raise TooManyDegenerateDraws(
                f"draw {i} stayed degenerate after {MAX_RETRIES} retries")

    gammas = gammas / areas[:, None]
    supports = rows / np.sqrt(areas)[:, None]
    return SampleBatch(normals, gammas, supports, seed, dist)


def empirical_hull_gap(normals: NormalSet, batch: SampleBatch) -> float:
    """How closely the sample cloud approaches every theoretical hull vertex.

    For each vertex the minimum Chebyshev distance over the batch is taken;
    the maximum of those minima comes back.  Small values corroborate that
    each vertex is a limit of cone-volume vectors (midpoint vertices are
    never attained exactly, only approached).
    """
    if batch.count < normals.m + 1:
        raise InputError("batch too small: need at least m + 1 samples")
    verts = hull_vertices(normals)
    gap = 0.0
    for v in verts:
        d = float(np.min(np.max(np.abs(batch.gammas - v), axis=1)))
        gap = max(gap, d)
    return gap
