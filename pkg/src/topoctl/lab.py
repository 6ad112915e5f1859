"""Instance generators and brute-force verification oracles.

The generators cover the logarithmic lower-bound family (exponentially
spaced 1-d doubling), seeded uniform boxes, and the cluster-plus-outlier
layout that maximizes uniform-radius interference.  The oracles
independently re-derive interference facts on small inputs: exhaustive
search over all breakpoint radii assignments, and dense-grid maximum depth.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .geometry import Instance
from .network import _check_radii

MAX_LOWER_BOUND_K = 12
MAX_ORACLE_N = 8

_MODE_IDS = {"exact1d": kernels._MODE_EXACT1D, "exact2d": kernels._MODE_EXACT2D,
             "at_sensors": kernels._MODE_AT_SENSORS}


def gen_lower_bound(k: int) -> Instance:
    """1-d doubling family U_k with 2^k sensors.

    U_0 = {0}; U_i is two copies of U_{i-1} with a gap of 2^(2i) between the
    nearest points of the copies.  The diameter stays below 2^(2i+1), which
    is re-checked after construction.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_LOWER_BOUND_K:
        raise ValueError(f"k too large (limit {MAX_LOWER_BOUND_K})")
    u = np.array([0.0])
    for i in range(1, k + 1):
        diam = u[-1] - u[0]
        u = np.concatenate([u, u + (diam + 2.0 ** (2 * i))])
    if k >= 1 and not u[-1] - u[0] < 2.0 ** (2 * k + 1):
        raise AssertionError("doubling family diameter bound violated")
    return Instance(dim=1, points=u[:, None])


def gen_uniform_random(n: int, d: int, seed: int, extent: float = 1.0) -> Instance:
    """n i.i.d. uniform points in [0, extent]^d, bit-reproducible per seed."""
    if n < 1 or d < 1 or not extent > 0:
        raise ValueError("need n >= 1, d >= 1, extent > 0")
    rng = np.random.default_rng(seed)
    return Instance(dim=d, points=rng.uniform(0.0, extent, size=(n, d)))


def gen_clustered_plus_outlier(n: int, d: int, seed: int, spread: float = 1.0,
                               separation: float = 100.0) -> Instance:
    """n-1 points in a ball of radius ``spread`` plus one point at distance
    ``separation`` from the ball center along the first axis."""
    if n < 2 or d < 1 or not spread > 0:
        raise ValueError("need n >= 2, d >= 1, spread > 0")
    if not separation >= 4 * spread:
        raise ValueError("separation must dominate spread (>= 4x)")
    rng = np.random.default_rng(seed)
    dirs = rng.standard_normal(size=(n - 1, d))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    radii = spread * rng.uniform(0.0, 1.0, size=(n - 1, 1)) ** (1.0 / d)
    outlier = np.zeros((1, d))
    outlier[0, 0] = separation
    return Instance(dim=d, points=np.vstack([dirs * radii, outlier]))


def oracle_min_interference(instance: Instance, measure_mode: str = "exact1d"
                            ) -> tuple[int, np.ndarray]:
    """Exhaustive minimum network interference over valid assignments.

    Search space: each sensor's radius ranges over its breakpoint set
    {d(s,t) : t != s}.  This loses no generality: lowering any radius to the
    next breakpoint below it keeps the edge set (validity depends only on
    edges) and shrinks every ball, so no point's coverage count grows --
    hence some optimal assignment takes breakpoint values everywhere, and
    any valid assignment has r(s) at least the smallest breakpoint of s.

    Returns the minimum interference under ``measure_mode`` and the
    lexicographically smallest minimizing assignment.
    """
    n = instance.n
    if n > MAX_ORACLE_N:
        raise ValueError(f"n too large for exhaustive search (limit {MAX_ORACLE_N})")
    if n < 2:
        raise ValueError("oracle needs at least 2 sensors")
    if instance.dim > 2:
        raise ValueError("oracle supports d <= 2 only")
    if measure_mode not in _MODE_IDS:
        raise ValueError(f"unknown measure mode {measure_mode!r}")
    if measure_mode == "exact1d" and instance.dim != 1:
        raise ValueError("mode exact1d requires dimension 1")
    if measure_mode == "exact2d" and instance.dim != 2:
        raise ValueError("mode exact2d requires dimension 2")

    pts = instance.points
    acc = np.zeros((n, n))
    for k in range(instance.dim):
        diff = pts[:, k, None] - pts[None, :, k]
        acc += diff * diff
    pair_d = np.sqrt(acc)

    K = n - 1
    cand = np.zeros((n, K))
    ncand = np.zeros(n, np.int64)
    for s in range(n):
        ds = np.unique(pair_d[s][np.arange(n) != s])
        cand[s, :ds.shape[0]] = ds
        ncand[s] = ds.shape[0]

    value, idx = kernels.min_interference_search(
        np.ascontiguousarray(pts), cand, ncand, pair_d, _MODE_IDS[measure_mode])
    radii = np.array([cand[s, idx[s]] for s in range(n)])
    return int(value), radii


def oracle_max_depth(instance: Instance, radii, grid_pitch: float) -> int:
    """Max coverage count over a dense grid on the inflated bounding box.

    A lower bound on the network interference; equals the exact value
    whenever the pitch is below the arrangement's minimum feature size.
    """
    r = _check_radii(instance, radii)
    if not grid_pitch > 0:
        raise ValueError("grid_pitch must be positive")
    pts = instance.points
    rmax = float(r.max())
    lo = pts.min(axis=0) - rmax
    hi = pts.max(axis=0) + rmax
    shape = np.maximum(np.floor((hi - lo) / grid_pitch).astype(np.int64) + 1, 1)
    best, _ = kernels.grid_depth_max(pts, r, np.ascontiguousarray(lo),
                                     float(grid_pitch), shape)
    return int(best)
