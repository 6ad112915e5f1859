"""Layered nearest-neighbor construction.

Rounds of nearest-neighbor-graph root selection: every non-surviving sensor
of a round gets its nearest-neighbor distance as radius, one root per weak
component survives to the next round, and the final survivor receives the
instance diameter (a finite stand-in for an unbounded radius that still
reaches every sensor).  The result is strongly connected in the asymmetric
model and its interference is logarithmic in n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import Instance


@dataclass(frozen=True)
class NngGraph:
    """Nearest-neighbor graph of an active subset.

    ``active`` holds the sensor ids in ascending order; ``out_edge[k]`` is
    the nearest neighbor (global id) of ``active[k]``; ``comp_id[k]`` labels
    the weak component (0-based, in order of first member).  Each component
    has exactly one mutual-nearest pair, recorded in ``roots``.
    """

    active: np.ndarray    # (m,) int64
    out_edge: np.ndarray  # (m,) int64
    comp_id: np.ndarray   # (m,) int64
    roots: np.ndarray     # (c, 2) int64, each row sorted


@dataclass(frozen=True)
class LnnResult:
    radii: np.ndarray   # (n,) float64
    levels: np.ndarray  # (n,) int64, largest round index the sensor was active in
    rounds: int


def nng(instance: Instance, active) -> NngGraph:
    """Nearest-neighbor graph over ``active``; ties go to the smaller index."""
    act = np.array(sorted({int(s) for s in active}), np.int64)
    if act.shape[0] < 2:
        raise ValueError("nng needs at least 2 active sensors")
    if act.min() < 0 or act.max() >= instance.n:
        raise ValueError(f"sensor index out of range (n={instance.n})")
    out = kernels.nn_indices(instance.points, act)

    pos = {int(s): k for k, s in enumerate(act)}
    parent = list(range(act.shape[0]))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(act.shape[0]):
        a, b = find(k), find(pos[int(out[k])])
        if a != b:
            parent[a] = b
    rep_order: dict[int, int] = {}
    comp = np.zeros(act.shape[0], np.int64)
    for k in range(act.shape[0]):
        rt = find(k)
        if rt not in rep_order:
            rep_order[rt] = len(rep_order)
        comp[k] = rep_order[rt]

    roots = np.full((len(rep_order), 2), -1, np.int64)
    for k in range(act.shape[0]):
        s = int(act[k])
        t = int(out[k])
        if s < t and int(out[pos[t]]) == s:
            c = int(comp[k])
            if roots[c, 0] != -1:
                raise AssertionError("weak component with two mutual-nearest pairs")
            roots[c] = (s, t)
    if np.any(roots < 0):
        raise AssertionError("weak component without a mutual-nearest pair")
    return NngGraph(active=act, out_edge=out, comp_id=comp, roots=roots)


def _diameter(instance: Instance) -> float:
    pts = instance.points
    n = instance.n
    best = 0.0
    chunk = max(1, 2_000_000 // max(n, 1))
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        acc = np.zeros((hi - lo, n))
        for k in range(instance.dim):
            diff = pts[lo:hi, k, None] - pts[None, :, k]
            acc += diff * diff
        best = max(best, float(np.sqrt(acc.max())))
    return best


def lnn(instance: Instance) -> LnnResult:
    """Run the layered construction; returns radii, per-sensor levels, rounds."""
    n = instance.n
    radii = np.zeros(n)
    levels = np.zeros(n, np.int64)
    active = np.arange(n, dtype=np.int64)
    rounds = 0
    while active.shape[0] > 1:
        g = nng(instance, active)
        survivors = g.roots[:, 0]  # smaller index of each mutual pair
        surv_set = set(int(s) for s in survivors)
        for k, s in enumerate(g.active):
            s = int(s)
            if s not in surv_set:
                t = int(g.out_edge[k])
                acc = 0.0
                for ax in range(instance.dim):
                    diff = float(instance.points[s, ax]) - float(instance.points[t, ax])
                    acc += diff * diff
                radii[s] = np.sqrt(acc)
                levels[s] = rounds
        active = np.sort(survivors)
        rounds += 1
    s0 = int(active[0])
    radii[s0] = _diameter(instance)
    levels[s0] = rounds
    return LnnResult(radii=radii, levels=levels, rounds=rounds)
