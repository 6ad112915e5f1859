"""Points, distances, grid bucketing, Euclidean MST and nearest neighbors.

The geometric substrate for the rest of the package.  Coordinates are plain
float64 arrays; sensors are identified by their zero-based row index, which
stays stable across every operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import kernels


@dataclass(frozen=True)
class Instance:
    """An ordered set of sensor positions in R^d."""

    dim: int
    points: np.ndarray  # (n, dim) float64

    def __post_init__(self):
        pts = np.ascontiguousarray(np.asarray(self.points, dtype=np.float64))
        if pts.ndim != 2:
            raise ValueError("points must be a 2-d array of shape (n, dim)")
        if self.dim < 1 or pts.shape[1] != self.dim:
            raise ValueError(f"points have {pts.shape[1]} coordinates, expected dim={self.dim}")
        if pts.shape[0] < 1:
            raise ValueError("an instance needs at least one sensor")
        if not np.all(np.isfinite(pts)):
            raise ValueError("coordinates must be finite")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned grid of half-open cubic cells of side ``cell_side``.

    A point belongs to exactly one cell: cell j along axis k covers
    [origin_k + j*R, origin_k + (j+1)*R).
    """

    cell_side: float
    origin: np.ndarray

    def __post_init__(self):
        if not (self.cell_side > 0.0 and math.isfinite(self.cell_side)):
            raise ValueError("cell_side must be a positive finite real")
        org = np.ascontiguousarray(np.asarray(self.origin, dtype=np.float64))
        if org.ndim != 1:
            raise ValueError("origin must be a 1-d coordinate vector")
        object.__setattr__(self, "origin", org)


@dataclass(frozen=True)
class EdgeList:
    """Undirected weighted edges, stored as (m, 2) index pairs plus lengths."""

    edges: np.ndarray   # (m, 2) int64, each row sorted u < v
    lengths: np.ndarray  # (m,) float64

    def __len__(self) -> int:
        return self.edges.shape[0]

    def __iter__(self) -> Iterator[tuple[int, int, float]]:
        for (u, v), l in zip(self.edges, self.lengths):
            yield int(u), int(v), float(l)


def distance(instance: Instance, u: int, v: int) -> float:
    """Euclidean distance between sensors u and v."""
    n = instance.n
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"sensor index out of range (n={n})")
    acc = 0.0
    for k in range(instance.dim):
        diff = float(instance.points[u, k]) - float(instance.points[v, k])
        acc += diff * diff
    return math.sqrt(acc)


def emst(instance: Instance) -> EdgeList:
    """Euclidean minimum spanning tree of the complete graph on the sensors.

    Deterministic under ties: among equal-length candidate edges the
    lexicographically smallest (u, v) index pair is preferred.  A single
    sensor yields an empty edge list.
    """
    n = instance.n
    if n == 1:
        return EdgeList(np.zeros((0, 2), np.int64), np.zeros(0))
    us, vs, lens = kernels.prim_mst(instance.points)
    edges = np.stack([np.minimum(us, vs), np.maximum(us, vs)], axis=1)
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return EdgeList(edges[order], lens[order])


def r_min(instance: Instance) -> float:
    """Length of the longest MST edge: the smallest uniform radius that
    makes the symmetric network connected."""
    if instance.n < 2:
        raise ValueError("r_min is undefined for singleton instances")
    return float(np.max(emst(instance).lengths))


def nearest_neighbor(instance: Instance, s: int, among: Iterable[int]) -> int:
    """Index of the sensor in ``among`` closest to s (s itself excluded).

    Ties broken by the smaller index.
    """
    n = instance.n
    if not 0 <= s < n:
        raise ValueError(f"sensor index out of range (n={n})")
    cand = sorted({int(t) for t in among} - {s})
    if not cand:
        raise ValueError("empty candidate set")
    for t in cand:
        if not 0 <= t < n:
            raise ValueError(f"sensor index out of range (n={n})")
    best = math.inf
    best_t = -1
    for t in cand:
        acc = 0.0
        for k in range(instance.dim):
            diff = float(instance.points[s, k]) - float(instance.points[t, k])
            acc += diff * diff
        if acc < best:
            best = acc
            best_t = t
    return best_t


def default_grid(instance: Instance, cell_side: float) -> GridSpec:
    """Grid anchored at the componentwise minimum of the instance."""
    return GridSpec(cell_side=float(cell_side), origin=instance.points.min(axis=0))


def bucket_of(point, grid: GridSpec) -> tuple[int, ...]:
    """Integer cell index of ``point`` under half-open cell semantics."""
    p = np.asarray(point, dtype=np.float64)
    if p.shape != grid.origin.shape:
        raise ValueError("point dimension does not match grid origin")
    return tuple(int(math.floor((float(p[k]) - float(grid.origin[k])) / grid.cell_side))
                 for k in range(p.shape[0]))


def sub_bucket_of(point, grid: GridSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bucket index plus the index of the d-per-axis sub-cell inside it.

    Each bucket splits into d^d sub-cells of side R/d, where d is the point
    dimension; for d=1 the single sub-cell is always (0,).
    """
    p = np.asarray(point, dtype=np.float64)
    if p.shape != grid.origin.shape:
        raise ValueError("point dimension does not match grid origin")
    d = p.shape[0]
    bucket = []
    sub = []
    for k in range(d):
        t = (float(p[k]) - float(grid.origin[k])) / grid.cell_side
        j = math.floor(t)
        frac = t - j
        sub_k = math.floor(frac * d)
        bucket.append(int(j))
        sub.append(min(max(int(sub_k), 0), d - 1))
    return tuple(bucket), tuple(sub)
