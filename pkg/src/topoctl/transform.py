"""Bounded-radius transformation of a valid assignment.

Buckets of side R partition space; clusters are connected components of the
uniform-radius-R graph restricted to one bucket; each cluster elects a
constant-size leader set (pairwise sub-bucket connectors) and neighboring
clusters are stitched with one witness pair.  Leaders and witnesses get
radius exactly R, everyone else is capped at R, and connectivity in the
input's model is preserved while the maximum radius drops to R.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import GridSpec, Instance, default_grid, r_min
from .network import _check_radii, is_valid


@dataclass(frozen=True)
class ClusterDecomposition:
    """Buckets and clusters of an instance for a given cell side R.

    ``clusters[c]`` is a sorted array of sensor ids, located in bucket
    ``cluster_bucket[c]``; ``cluster_of[s]`` maps a sensor to its cluster.
    """

    instance: Instance
    grid: GridSpec
    clusters: list[np.ndarray]
    cluster_bucket: list[tuple[int, ...]]
    cluster_of: np.ndarray  # (n,) int64

    @property
    def R(self) -> float:
        return self.grid.cell_side


def _validate_cap(instance: Instance, R: float) -> float:
    R = float(R)
    if not (R > 0.0 and math.isfinite(R)):
        raise ValueError("radius below connectivity threshold")
    if instance.n >= 2 and R < r_min(instance):
        raise ValueError("radius below connectivity threshold")
    return R


def decompose(instance: Instance, R: float, origin=None) -> ClusterDecomposition:
    """Bucket the sensors into cells of side R and split each bucket into
    clusters (components of the uniform-R graph restricted to the bucket)."""
    R = _validate_cap(instance, R)
    grid = GridSpec(R, np.asarray(origin, dtype=np.float64)) if origin is not None \
        else default_grid(instance, R)
    if grid.origin.shape[0] != instance.dim:
        raise ValueError("grid origin dimension does not match instance")
    pts = instance.points
    n = instance.n

    cell = np.floor((pts - grid.origin[None, :]) / R).astype(np.int64)
    buckets: dict[tuple[int, ...], list[int]] = {}
    for s in range(n):
        buckets.setdefault(tuple(int(c) for c in cell[s]), []).append(s)

    clusters: list[np.ndarray] = []
    cluster_bucket: list[tuple[int, ...]] = []
    cluster_of = np.full(n, -1, np.int64)
    for b in sorted(buckets):
        members = np.array(buckets[b], np.int64)
        sub = np.ascontiguousarray(pts[members])
        labels = kernels.components_sym(sub, np.full(members.shape[0], R))
        for lab in range(int(labels.max()) + 1):
            ids = members[labels == lab]
            cluster_of[ids] = len(clusters)
            clusters.append(ids)
            cluster_bucket.append(b)
    return ClusterDecomposition(instance=instance, grid=grid, clusters=clusters,
                                cluster_bucket=cluster_bucket, cluster_of=cluster_of)


def _sub_index(decomp: ClusterDecomposition, s: int) -> tuple[int, ...]:
    d = decomp.instance.dim
    sub = []
    for k in range(d):
        t = (float(decomp.instance.points[s, k]) - float(decomp.grid.origin[k])) / decomp.R
        frac = t - math.floor(t)
        sub.append(min(max(int(math.floor(frac * d)), 0), d - 1))
    return tuple(sub)


def leaders(decomp: ClusterDecomposition, cluster: int) -> np.ndarray:
    """Leader set of one cluster.

    A single-sub-bucket cluster elects its smallest index.  Otherwise for
    every pair of occupied sub-buckets joined by at least one edge of the
    uniform-R graph, the lexicographically smallest such edge contributes
    both endpoints.
    """
    members = decomp.clusters[cluster]
    if members.shape[0] == 0:
        raise ValueError("cluster is empty")
    groups: dict[tuple[int, ...], list[int]] = {}
    for s in members:
        groups.setdefault(_sub_index(decomp, int(s)), []).append(int(s))
    if len(groups) == 1:
        return np.array([int(members.min())], np.int64)
    pts = decomp.instance.points
    R = decomp.R
    chosen: set[int] = set()
    for b1, b2 in itertools.combinations(sorted(groups), 2):
        best: tuple[int, int] | None = None
        for u in groups[b1]:
            for v in groups[b2]:
                acc = 0.0
                for k in range(decomp.instance.dim):
                    diff = float(pts[u, k]) - float(pts[v, k])
                    acc += diff * diff
                if math.sqrt(acc) <= R:
                    pair = (min(u, v), max(u, v))
                    if best is None or pair < best:
                        best = pair
        if best is not None:
            chosen.update(best)
    return np.array(sorted(chosen), np.int64)


def witnesses(decomp: ClusterDecomposition) -> list[tuple[int, int, int, int]]:
    """One witness pair per neighboring cluster pair.

    Returns (u, v, cluster of u, cluster of v) tuples with u < v, ordered by
    cluster pair.  Two clusters are neighbors when some cross pair is within
    R; only clusters of adjacent buckets can qualify, and clusters sharing a
    bucket never do.
    """
    pts = decomp.instance.points
    R = decomp.R
    by_bucket: dict[tuple[int, ...], list[int]] = {}
    for ci, b in enumerate(decomp.cluster_bucket):
        by_bucket.setdefault(b, []).append(ci)
    d = decomp.instance.dim
    offsets = [off for off in itertools.product((-1, 0, 1), repeat=d)]
    out: list[tuple[int, int, int, int]] = []
    for ci in range(len(decomp.clusters)):
        b = decomp.cluster_bucket[ci]
        for off in offsets:
            nb = tuple(b[k] + off[k] for k in range(d))
            for cj in by_bucket.get(nb, ()):
                if cj <= ci:
                    continue
                best: tuple[int, int] | None = None
                for u in decomp.clusters[ci]:
                    for v in decomp.clusters[cj]:
                        u, v = int(u), int(v)
                        acc = 0.0
                        for k in range(d):
                            diff = float(pts[u, k]) - float(pts[v, k])
                            acc += diff * diff
                        if math.sqrt(acc) <= R:
                            pair = (min(u, v), max(u, v))
                            if best is None or pair < best:
                                best = pair
                if best is not None:
                    out.append((best[0], best[1], int(decomp.cluster_of[best[0]]),
                                int(decomp.cluster_of[best[1]])))
    out.sort(key=lambda w: (min(w[2], w[3]), max(w[2], w[3])))
    return out


def neighbor_relation(decomp: ClusterDecomposition) -> set[tuple[int, int]]:
    """Unordered neighboring-cluster pairs (derived from the witness list)."""
    return {(min(ci, cj), max(ci, cj)) for _, _, ci, cj in witnesses(decomp)}


def transform(instance: Instance, r_in, R: float, model: str = "symmetric",
              origin=None) -> np.ndarray:
    """Cap a valid assignment at R without losing connectivity.

    Leaders and witnesses get radius exactly R; every other sensor gets
    min(r_in, R).  The input must be valid in ``model`` (symmetric:
    connected, asymmetric: strongly connected) and the output stays valid in
    that same model.  Only leaders and witnesses can end up above their
    input radius.
    """
    r = _check_radii(instance, r_in)
    R = _validate_cap(instance, R)
    if not is_valid(instance, r, model):
        raise ValueError("input assignment not valid")
    decomp = decompose(instance, R, origin=origin)
    out = np.minimum(r, R)
    for ci in range(len(decomp.clusters)):
        out[leaders(decomp, ci)] = R
    for u, v, _, _ in witnesses(decomp):
        out[u] = R
        out[v] = R
    return out


def decomposition_summary(decomp: ClusterDecomposition) -> dict:
    """JSON-ready dump: clusters with buckets and leaders, witness pairs."""
    wit = witnesses(decomp)
    return {
        "cell_side": decomp.R,
        "origin": [float(x) for x in decomp.grid.origin],
        "clusters": [
            {
                "bucket": list(decomp.cluster_bucket[ci]),
                "sensors": [int(s) for s in decomp.clusters[ci]],
                "leaders": [int(s) for s in leaders(decomp, ci)],
            }
            for ci in range(len(decomp.clusters))
        ],
        "witness_pairs": [
            {"u": u, "v": v, "cluster_u": cu, "cluster_v": cv}
            for u, v, cu, cv in wit
        ],
        "neighbor_pairs": sorted({(min(cu, cv), max(cu, cv)) for _, _, cu, cv in wit}),
    }
