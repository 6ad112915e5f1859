"""Communication graphs and receiver-based interference measurement.

A radii assignment is a plain float64 array, one nonnegative radius per
sensor.  Two edge models exist:

* symmetric   - undirected edge uv iff min(r(u), r(v)) >= d(u, v)
* asymmetric  - directed edge u->v iff r(u) >= d(u, v)

The interference of a point p is the number of sensors whose closed ball
covers p; the interference of the network is the maximum over all of R^d.
For d=1 and d=2 the maximum is computed exactly from the arrangement of
balls; for higher dimensions only the at-sensors and sampled lower-bound
modes are available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .geometry import Instance

MODELS = ("symmetric", "asymmetric")
MODES = ("exact1d", "exact2d", "at_sensors", "sampled")

_SAMPLE_BLOCK = 4096


@dataclass(frozen=True)
class Network:
    """Edge set induced by an assignment under one of the two models."""

    model: str
    n: int
    edges: np.ndarray  # (m, 2) int64; u < v rows for symmetric, (u, v) directed otherwise


@dataclass(frozen=True)
class InterferenceReport:
    value: int
    witness_point: np.ndarray
    mode: str
    candidates_evaluated: int


def _check_radii(instance: Instance, radii) -> np.ndarray:
    r = np.ascontiguousarray(np.asarray(radii, dtype=np.float64))
    if r.shape != (instance.n,):
        raise ValueError(f"assignment length {r.shape} does not match instance n={instance.n}")
    if not np.all(np.isfinite(r)) or np.any(r < 0):
        raise ValueError("radii must be finite and nonnegative")
    return r


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")
    return model


def uniform_assignment(instance: Instance, R: float) -> np.ndarray:
    """Every sensor gets the same radius R."""
    if not (R >= 0.0 and math.isfinite(R)):
        raise ValueError("uniform radius must be nonnegative and finite")
    return np.full(instance.n, float(R))


def build_network(instance: Instance, radii, model: str) -> Network:
    """Materialize the edge set of the induced graph."""
    r = _check_radii(instance, radii)
    _check_model(model)
    n = instance.n
    pts = instance.points
    rows = []
    chunk = max(1, 2_000_000 // max(n, 1))
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        acc = np.zeros((hi - lo, n))
        for k in range(instance.dim):
            diff = pts[lo:hi, k, None] - pts[None, :, k]
            acc += diff * diff
        d = np.sqrt(acc)
        if model == "symmetric":
            cov = np.minimum(r[lo:hi, None], r[None, :]) >= d
            ui, vi = np.nonzero(cov)
            ui = ui + lo
            keep = ui < vi
            rows.append(np.stack([ui[keep], vi[keep]], axis=1))
        else:
            cov = r[lo:hi, None] >= d
            ui, vi = np.nonzero(cov)
            ui = ui + lo
            keep = ui != vi
            rows.append(np.stack([ui[keep], vi[keep]], axis=1))
    edges = np.concatenate(rows, axis=0) if rows else np.zeros((0, 2), np.int64)
    return Network(model=model, n=n, edges=edges.astype(np.int64))


def is_valid(instance: Instance, radii, model: str = "symmetric") -> bool:
    """Symmetric: induced graph connected; asymmetric: strongly connected."""
    r = _check_radii(instance, radii)
    _check_model(model)
    if instance.n == 1:
        return True
    if model == "symmetric":
        labels = kernels.components_sym(instance.points, r)
        return bool(np.all(labels == labels[0]))
    return bool(kernels.reach_directed(instance.points, r, False)) and \
        bool(kernels.reach_directed(instance.points, r, True))


def interference_at(instance: Instance, radii, p) -> int:
    """Number of sensors whose ball covers p (boundary inclusive)."""
    r = _check_radii(instance, radii)
    q = np.ascontiguousarray(np.asarray(p, dtype=np.float64)).reshape(-1)
    if q.shape[0] != instance.dim:
        raise ValueError(f"point has dimension {q.shape[0]}, instance has {instance.dim}")
    return int(kernels.cover_counts(instance.points, r, q[None, :])[0])


def _pair_candidate_point(pts: np.ndarray, radii: np.ndarray, i: int, j: int,
                          sign: float) -> np.ndarray:
    """Circle-circle intersection point, same arithmetic as the scan kernels."""
    dx = pts[j, 0] - pts[i, 0]
    dy = pts[j, 1] - pts[i, 1]
    d2 = dx * dx + dy * dy
    dd = np.sqrt(d2)
    a = (d2 + radii[i] * radii[i] - radii[j] * radii[j]) / (2.0 * dd)
    h = np.sqrt(radii[i] * radii[i] - a * a)
    mx = pts[i, 0] + a * dx / dd
    my = pts[i, 1] + a * dy / dd
    ox = -dy / dd * h
    oy = dx / dd * h
    return np.array([mx + sign * ox, my + sign * oy])


def _witness_for_candidate(instance: Instance, r: np.ndarray, value: int,
                           kind: int, i: int, j: int) -> np.ndarray:
    """Pick a witness point whose measured interference equals ``value``.

    Boundary-generated candidates may sit an ulp outside their generating
    balls; when the raw point does not reproduce the value under the plain
    inclusive predicate, a point nudged into the intersection wedge is
    tried before falling back to the raw candidate.
    """
    pts = instance.points
    if kind == kernels.CAND_CENTER:
        return pts[i].copy()
    if kind in (kernels.CAND_ENDPOINT_LEFT, kernels.CAND_ENDPOINT_RIGHT):
        x = pts[i, 0] - r[i] if kind == kernels.CAND_ENDPOINT_LEFT else pts[i, 0] + r[i]
        raw = np.array([x])
        if interference_at(instance, r, raw) == value:
            return raw
        delta = max(abs(x), r[i]) * 2.0 ** -30
        nudged = np.array([x + delta if kind == kernels.CAND_ENDPOINT_LEFT else x - delta])
        if interference_at(instance, r, nudged) == value:
            return nudged
        return raw
    sign = 1.0 if kind == kernels.CAND_PAIR_PLUS else -1.0
    raw = _pair_candidate_point(pts, r, i, j, sign)
    if interference_at(instance, r, raw) == value:
        return raw
    ui = pts[i] - raw
    uj = pts[j] - raw
    ni = np.sqrt(ui[0] * ui[0] + ui[1] * ui[1])
    nj = np.sqrt(uj[0] * uj[0] + uj[1] * uj[1])
    if ni > 0.0 and nj > 0.0:
        w = ui / ni + uj / nj
        nw = np.sqrt(w[0] * w[0] + w[1] * w[1])
        if nw > 1e-12:
            delta = (r[i] + r[j]) * 2.0 ** -30
            nudged = raw + w / nw * delta
            if interference_at(instance, r, nudged) == value:
                return nudged
    return raw


def network_interference(instance: Instance, radii, mode: str,
                         samples: int = 1024, seed: int | None = None) -> InterferenceReport:
    """Interference of the network: max coverage depth over R^d.

    exact1d / exact2d enumerate the points where the arrangement of closed
    balls can attain its maximum (interval endpoints resp. ball centers and
    pairwise circle intersections) and are exact.  at_sensors restricts the
    measurement to sensor positions.  sampled additionally evaluates
    ``samples`` uniform random points in the bounding box inflated by the
    largest radius and reports a lower bound; it draws fixed-size blocks
    from seed-derived substreams, so the result is independent of any
    chunking or parallel split.
    """
    r = _check_radii(instance, radii)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "exact1d" and instance.dim != 1:
        raise ValueError("mode exact1d requires dimension 1")
    if mode == "exact2d" and instance.dim != 2:
        raise ValueError("mode exact2d requires dimension 2")
    pts = instance.points

    if mode == "exact1d":
        value, kind, s, evaluated = kernels.exact1d_scan(pts, r)
        witness = _witness_for_candidate(instance, r, int(value), int(kind), int(s), -1)
        return InterferenceReport(int(value), witness, mode, int(evaluated))

    if mode == "exact2d":
        value, kind, i, j, evaluated = kernels.exact2d_scan(pts, r)
        witness = _witness_for_candidate(instance, r, int(value), int(kind), int(i), int(j))
        return InterferenceReport(int(value), witness, mode, int(evaluated))

    counts = kernels.cover_counts(pts, r, pts)
    best = int(counts.max())
    witness = pts[int(np.argmax(counts))].copy()
    evaluated = instance.n

    if mode == "sampled":
        if seed is None:
            raise ValueError("mode sampled requires a seed")
        if samples < 0:
            raise ValueError("samples must be nonnegative")
        rmax = float(r.max()) if instance.n else 0.0
        lo = pts.min(axis=0) - rmax
        hi = pts.max(axis=0) + rmax
        ss = np.random.SeedSequence(seed)
        children = ss.spawn(math.ceil(samples / _SAMPLE_BLOCK)) if samples else []
        done = 0
        for child in children:
            take = min(_SAMPLE_BLOCK, samples - done)
            block = np.random.default_rng(child).uniform(lo, hi, size=(take, instance.dim))
            c = kernels.cover_counts(pts, r, np.ascontiguousarray(block))
            m = int(c.max()) if take else -1
            if m > best:
                best = m
                witness = block[int(np.argmax(c))].copy()
            done += take
        evaluated += done

    return InterferenceReport(best, witness, mode, evaluated)
