"""Numeric kernels with two interchangeable backends.

The hot inner loops (coverage counting, Prim MST, nearest-neighbor scans,
grid depth sweeps, exhaustive assignment search) are compiled with numba
@njit by default.  Setting the environment variable ``TOPOCTL_NO_NUMBA=1``
(or running without numba installed) selects pure-numpy fallbacks instead.
Both backends use the same arithmetic expression order, so results are
bitwise identical; ``scripts/benchmark_kernels.py`` compares them.

All distance comparisons in the package go through these kernels with the
predicate ``r >= sqrt(sum_k (a_k - b_k)^2)`` evaluated in length space.
This matters: r_min is reported as a length, and a uniform assignment at
exactly r_min must reproduce the same doubles as the MST edge lengths so
that connectivity at the threshold is exact.
"""

from __future__ import annotations

import os

import numpy as np

_MODE_EXACT1D = 0
_MODE_EXACT2D = 1
_MODE_AT_SENSORS = 2

# Candidate-kind tags returned by the exact scans.
CAND_CENTER = 0
CAND_ENDPOINT_LEFT = 1
CAND_ENDPOINT_RIGHT = 2
CAND_PAIR_PLUS = 3
CAND_PAIR_MINUS = 4


def _env_no_numba() -> bool:
    return os.environ.get("TOPOCTL_NO_NUMBA", "").strip() not in ("", "0")


try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - mirror environment always has numba
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _env_no_numba()


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _np_pair_dists(points: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """(m, n) matrix of |q_i - p_j| with fixed per-axis accumulation order."""
    m, n = queries.shape[0], points.shape[0]
    acc = np.zeros((m, n))
    for k in range(points.shape[1]):
        diff = queries[:, k, None] - points[None, :, k]
        acc += diff * diff
    return np.sqrt(acc)


def _np_cover_counts(points, radii, queries):
    m = queries.shape[0]
    out = np.zeros(m, np.int64)
    chunk = max(1, 4_000_000 // max(points.shape[0], 1))
    for lo in range(0, m, chunk):
        q = queries[lo:lo + chunk]
        d = _np_pair_dists(points, q)
        out[lo:lo + q.shape[0]] = (radii[None, :] >= d).sum(axis=1)
    return out


def _np_prim_mst(points):
    n = points.shape[0]
    us = np.zeros(n - 1, np.int64)
    vs = np.zeros(n - 1, np.int64)
    lens = np.zeros(n - 1)
    intree = np.zeros(n, bool)
    intree[0] = True
    key = _np_pair_dists(points, points[0:1])[0]
    key[0] = np.inf
    parent = np.zeros(n, np.int64)
    for e in range(n - 1):
        best = np.min(key)
        ties = np.flatnonzero(key == best)
        if ties.shape[0] > 1:
            a = np.minimum(parent[ties], ties)
            b = np.maximum(parent[ties], ties)
            v = int(ties[np.lexsort((b, a))[0]])
        else:
            v = int(ties[0])
        us[e], vs[e], lens[e] = parent[v], v, key[v]
        intree[v] = True
        key[v] = np.inf
        d = _np_pair_dists(points, points[v:v + 1])[0]
        upd = ~intree & (d < key)
        # equal-length candidate edge with a lexicographically smaller pair
        eq = ~intree & (d == key)
        if np.any(eq):
            idx = np.flatnonzero(eq)
            a_new = np.minimum(v, idx)
            b_new = np.maximum(v, idx)
            a_old = np.minimum(parent[idx], idx)
            b_old = np.maximum(parent[idx], idx)
            better = (a_new < a_old) | ((a_new == a_old) & (b_new < b_old))
            upd[idx[better]] = True
        key[upd] = d[upd]
        parent[upd] = v
    return us, vs, lens


def _np_nn_indices(points, active):
    pts = points[active]
    m = pts.shape[0]
    out = np.zeros(m, np.int64)
    chunk = max(1, 4_000_000 // max(m, 1))
    for lo in range(0, m, chunk):
        q = pts[lo:lo + chunk]
        acc = np.zeros((q.shape[0], m))
        for k in range(pts.shape[1]):
            diff = q[:, k, None] - pts[None, :, k]
            acc += diff * diff
        rows = np.arange(lo, lo + q.shape[0])
        acc[rows - lo, rows] = np.inf
        out[lo:lo + q.shape[0]] = np.argmin(acc, axis=1)
    return active[out]


def _np_components_sym(points, radii):
    """Connected-component labels of the symmetric graph, O(n) memory."""
    n = points.shape[0]
    labels = np.full(n, -1, np.int64)
    comp = 0
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = comp
        frontier = np.array([start], np.int64)
        while frontier.size:
            todo = np.flatnonzero(labels < 0)
            if todo.size == 0:
                break
            hit = np.zeros(todo.shape[0], bool)
            for f in frontier:
                d = _np_pair_dists(points[todo], points[f:f + 1])[0]
                hit |= np.minimum(radii[f], radii[todo]) >= d
            frontier = todo[hit]
            labels[frontier] = comp
        comp += 1
    return labels


def _np_reach_directed(points, radii, reverse):
    """Can sensor 0 reach everyone along directed edges (or along reversed ones)?"""
    n = points.shape[0]
    seen = np.zeros(n, bool)
    seen[0] = True
    frontier = np.array([0], np.int64)
    while frontier.size:
        todo = np.flatnonzero(~seen)
        if todo.size == 0:
            break
        hit = np.zeros(todo.shape[0], bool)
        for f in frontier:
            d = _np_pair_dists(points[todo], points[f:f + 1])[0]
            if reverse:
                hit |= radii[todo] >= d
            else:
                hit |= radii[f] >= d
        frontier = todo[hit]
        seen[frontier] = True
    return bool(seen.all())


def _np_grid_depth_max(points, radii, lo, pitch, shape):
    """Max cover count over the implicit grid lo + pitch*(i_1..i_d).

    Returns (best count, flat row-major index of the first maximiser).
    """
    d = lo.shape[0]
    total = int(np.prod(shape))
    best = -1
    best_flat = -1
    if d == 1:
        chunk = 1 << 16
        for s in range(0, total, chunk):
            idx = np.arange(s, min(s + chunk, total))
            q = (lo[0] + idx * pitch)[:, None]
            c = _np_cover_counts(points, radii, q)
            mx = int(c.max())
            if mx > best:
                best = mx
                best_flat = int(idx[int(np.argmax(c))])
        return best, best_flat
    tail_shape = shape[1:]
    tail = int(np.prod(tail_shape))
    coords = np.zeros((tail, d))
    rem = np.arange(tail)
    for k in range(d - 1, 0, -1):
        coords[:, k] = lo[k] + (rem % shape[k]) * pitch
        rem //= shape[k]
    for i0 in range(shape[0]):
        coords[:, 0] = lo[0] + i0 * pitch
        c = _np_cover_counts(points, radii, coords)
        mx = int(c.max())
        if mx > best:
            best = mx
            best_flat = i0 * tail + int(np.argmax(c))
    return best, best_flat


def _np_exact1d_scan(points, radii):
    """Scan 1d candidates; an endpoint counts its own interval by construction.

    Returns (value, kind, sensor index, candidates evaluated).
    """
    x = points[:, 0]
    n = x.shape[0]
    d_left = np.abs(x[None, :] - (x - radii)[:, None])   # (cand s, sensor t)
    d_right = np.abs(x[None, :] - (x + radii)[:, None])
    d_cent = np.abs(x[None, :] - x[:, None])
    cov_left = radii[None, :] >= d_left
    cov_right = radii[None, :] >= d_right
    cnt_left = cov_left.sum(axis=1) + (1 - cov_left[np.arange(n), np.arange(n)])
    cnt_right = cov_right.sum(axis=1) + (1 - cov_right[np.arange(n), np.arange(n)])
    cnt_cent = (radii[None, :] >= d_cent).sum(axis=1)
    best, kind, sensor = -1, -1, -1
    for s in range(n):
        for k, c in ((CAND_ENDPOINT_LEFT, int(cnt_left[s])),
                     (CAND_ENDPOINT_RIGHT, int(cnt_right[s]))):
            if c > best:
                best, kind, sensor = c, k, s
    for s in range(n):
        if int(cnt_cent[s]) > best:
            best, kind, sensor = int(cnt_cent[s]), CAND_CENTER, s
    return best, kind, sensor, 3 * n


def _np_exact2d_scan(points, radii):
    """Scan 2d candidates (centers, pairwise circle intersections).

    Intersection candidates count their two generating disks by construction.
    Returns (value, kind, i, j, candidates evaluated); for kind CAND_CENTER
    only i is meaningful.
    """
    n = points.shape[0]
    cnt_cent = _np_cover_counts(points, radii, points)
    best = int(cnt_cent.max())
    arg = int(np.argmax(cnt_cent))
    kind, bi, bj = CAND_CENTER, arg, -1
    evaluated = n
    ii, jj = np.triu_indices(n, k=1)
    chunk = max(1, 500_000 // max(n, 1))
    for lo in range(0, ii.shape[0], chunk):
        pi = ii[lo:lo + chunk]
        pj = jj[lo:lo + chunk]
        c1 = points[pi]
        c2 = points[pj]
        r1 = radii[pi]
        r2 = radii[pj]
        dx = c2[:, 0] - c1[:, 0]
        dy = c2[:, 1] - c1[:, 1]
        d2 = dx * dx + dy * dy
        with np.errstate(divide="ignore", invalid="ignore"):
            dd = np.sqrt(d2)
            a = (d2 + r1 * r1 - r2 * r2) / (2.0 * dd)
            h2 = r1 * r1 - a * a
        ok = (d2 > 0.0) & (h2 >= 0.0)
        if not np.any(ok):
            continue
        pi, pj = pi[ok], pj[ok]
        c1, dx, dy, dd, a = c1[ok], dx[ok], dy[ok], dd[ok], a[ok]
        h = np.sqrt(h2[ok])
        mx = c1[:, 0] + a * dx / dd
        my = c1[:, 1] + a * dy / dd
        ox = -dy / dd * h
        oy = dx / dd * h
        # pair-major, sign-minor candidate order (same as the loop backend)
        m = pi.shape[0]
        q = np.empty((2 * m, 2))
        q[0::2, 0] = mx + ox
        q[0::2, 1] = my + oy
        q[1::2, 0] = mx - ox
        q[1::2, 1] = my - oy
        qi = np.repeat(pi, 2)
        qj = np.repeat(pj, 2)
        cnt = _np_cover_counts(points, radii, q)
        d_i = np.sqrt((q[:, 0] - points[qi, 0]) ** 2 + (q[:, 1] - points[qi, 1]) ** 2)
        d_j = np.sqrt((q[:, 0] - points[qj, 0]) ** 2 + (q[:, 1] - points[qj, 1]) ** 2)
        cnt = cnt + (radii[qi] < d_i).astype(np.int64) + (radii[qj] < d_j).astype(np.int64)
        evaluated += q.shape[0]
        mval = int(cnt.max())
        if mval > best:
            k = int(np.argmax(cnt))
            best = mval
            kind = CAND_PAIR_PLUS if k % 2 == 0 else CAND_PAIR_MINUS
            bi, bj = int(qi[k]), int(qj[k])
    return best, kind, bi, bj, evaluated


def _np_min_interference_search(points, cand, ncand, pair_d, mode):
    """Exhaustive search over breakpoint radii; numpy batch evaluation.

    Returns (best value, per-sensor candidate indices of the first minimiser
    in lexicographic order).
    """
    n = points.shape[0]
    total = int(np.prod(ncand))
    weights = np.ones(n, np.int64)
    for s in range(n - 2, -1, -1):
        weights[s] = weights[s + 1] * ncand[s + 1]
    best = np.iinfo(np.int64).max
    best_flat = -1
    batch = 1 << 15
    eye = np.eye(n, dtype=bool)
    for lo in range(0, total, batch):
        flat = np.arange(lo, min(lo + batch, total), dtype=np.int64)
        idx = (flat[:, None] // weights[None, :]) % ncand[None, :]
        r = cand[np.arange(n)[None, :], idx]
        adj = np.minimum(r[:, :, None], r[:, None, :]) >= pair_d[None, :, :]
        adj |= eye[None, :, :]
        reach = adj.astype(np.float32)
        for _ in range(max(1, int(np.ceil(np.log2(max(n, 2)))))):
            reach = np.matmul(reach, reach)
            np.clip(reach, 0.0, 1.0, out=reach)
        valid = reach[:, 0, :].astype(bool).all(axis=1)
        if not np.any(valid):
            continue
        rv = r[valid]
        fv = flat[valid]
        depth = _np_batch_depth(points, rv, mode)
        m = int(depth.min())
        if m < best:
            k = int(np.argmin(depth))
            best = m
            best_flat = int(fv[k])
    out_idx = np.zeros(n, np.int64)
    rem = best_flat
    for s in range(n):
        out_idx[s] = rem // weights[s]
        rem %= weights[s]
    return best, out_idx


def _np_batch_depth(points, r, mode):
    """Per-assignment exact interference for a (B, n) block of radii."""
    B, n = r.shape
    x = points[:, 0]
    if mode == _MODE_AT_SENSORS:
        d = _np_pair_dists(points, points)  # (cand, sensor)
        cov = r[:, None, :] >= d[None, :, :]
        return cov.sum(axis=2).max(axis=1)
    if mode == _MODE_EXACT1D:
        cands = np.concatenate([x[None, :] - r, x[None, :] + r, np.broadcast_to(x, (B, n))], axis=1)
        d = np.abs(x[None, None, :] - cands[:, :, None])  # (B, 3n, n)
        cov = r[:, None, :] >= d
        cnt = cov.sum(axis=2)
        own = np.arange(n)
        cnt[:, :n] += 1 - cov[:, own, own]
        cnt[:, n:2 * n] += 1 - cov[:, n + own, own]
        return cnt.max(axis=1)
    # exact2d
    px, py = points[:, 0], points[:, 1]
    d = _np_pair_dists(points, points)
    cov_c = r[:, None, :] >= d[None, :, :]
    depth = cov_c.sum(axis=2).max(axis=1)
    ii, jj = np.triu_indices(n, k=1)
    dx = px[jj] - px[ii]
    dy = py[jj] - py[ii]
    d2 = dx * dx + dy * dy
    dd = np.sqrt(d2)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = (d2[None, :] + r[:, ii] ** 2 - r[:, jj] ** 2) / (2.0 * dd[None, :])
        h2 = r[:, ii] ** 2 - a * a
    ok = (d2[None, :] > 0.0) & (h2 >= 0.0)
    h = np.sqrt(np.where(ok, h2, 0.0))
    mx = px[ii][None, :] + a * dx[None, :] / dd[None, :]
    my = py[ii][None, :] + a * dy[None, :] / dd[None, :]
    ox = -dy[None, :] / dd[None, :] * h
    oy = dx[None, :] / dd[None, :] * h
    for sgn in (1.0, -1.0):
        qx = mx + sgn * ox  # (B, P)
        qy = my + sgn * oy
        ddp = np.zeros(qx.shape + (n,))
        for t in range(n):
            ddp[:, :, t] = np.sqrt((px[t] - qx) ** 2 + (py[t] - qy) ** 2)
        cov = r[:, None, :] >= ddp
        cnt = cov.sum(axis=2)
        cnt += (~cov[:, np.arange(ii.shape[0]), ii]).astype(np.int64)
        cnt += (~cov[:, np.arange(jj.shape[0]), jj]).astype(np.int64)
        cnt = np.where(ok, cnt, -1)
        depth = np.maximum(depth, cnt.max(axis=1))
    return depth


# ---------------------------------------------------------------------------
# numba backend (same arithmetic, loop form)
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    from numba import njit, prange

    @njit(cache=True)
    def _dist(points, i, qrow):
        acc = 0.0
        for k in range(points.shape[1]):
            diff = qrow[k] - points[i, k]
            acc += diff * diff
        return np.sqrt(acc)

    @njit(cache=True, parallel=True)
    def _nb_cover_counts(points, radii, queries):
        m = queries.shape[0]
        n = points.shape[0]
        out = np.zeros(m, np.int64)
        for q in prange(m):
            c = 0
            for s in range(n):
                if radii[s] >= _dist(points, s, queries[q]):
                    c += 1
            out[q] = c
        return out

    @njit(cache=True)
    def _nb_prim_mst(points):
        n = points.shape[0]
        us = np.zeros(n - 1, np.int64)
        vs = np.zeros(n - 1, np.int64)
        lens = np.zeros(n - 1)
        intree = np.zeros(n, np.bool_)
        intree[0] = True
        key = np.empty(n)
        parent = np.zeros(n, np.int64)
        for v in range(n):
            key[v] = _dist(points, v, points[0])
        key[0] = np.inf
        for e in range(n - 1):
            v = -1
            ba, bb = -1, -1
            for u in range(n):
                if intree[u]:
                    continue
                if v == -1 or key[u] < key[v]:
                    v = u
                    ba = min(parent[u], u)
                    bb = max(parent[u], u)
                elif key[u] == key[v]:
                    a = min(parent[u], u)
                    b = max(parent[u], u)
                    if a < ba or (a == ba and b < bb):
                        v = u
                        ba, bb = a, b
            us[e], vs[e], lens[e] = parent[v], v, key[v]
            intree[v] = True
            key[v] = np.inf
            for u in range(n):
                if intree[u]:
                    continue
                d = _dist(points, u, points[v])
                if d < key[u]:
                    key[u] = d
                    parent[u] = v
                elif d == key[u]:
                    a = min(v, u)
                    b = max(v, u)
                    a0 = min(parent[u], u)
                    b0 = max(parent[u], u)
                    if a < a0 or (a == a0 and b < b0):
                        parent[u] = v
        return us, vs, lens

    @njit(cache=True)
    def _nb_nn_indices(points, active):
        m = active.shape[0]
        out = np.zeros(m, np.int64)
        for qi in range(m):
            s = active[qi]
            best = np.inf
            bi = -1
            for ti in range(m):
                if ti == qi:
                    continue
                t = active[ti]
                acc = 0.0
                for k in range(points.shape[1]):
                    diff = points[s, k] - points[t, k]
                    acc += diff * diff
                if acc < best:
                    best = acc
                    bi = t
            out[qi] = bi
        return out

    @njit(cache=True)
    def _nb_components_sym(points, radii):
        n = points.shape[0]
        labels = np.full(n, -1, np.int64)
        stack = np.zeros(n, np.int64)
        comp = 0
        for start in range(n):
            if labels[start] >= 0:
                continue
            labels[start] = comp
            stack[0] = start
            top = 1
            while top > 0:
                top -= 1
                f = stack[top]
                for u in range(n):
                    if labels[u] >= 0:
                        continue
                    d = _dist(points, u, points[f])
                    rm = radii[f] if radii[f] < radii[u] else radii[u]
                    if rm >= d:
                        labels[u] = comp
                        stack[top] = u
                        top += 1
            comp += 1
        return labels

    @njit(cache=True)
    def _nb_reach_directed(points, radii, reverse):
        n = points.shape[0]
        seen = np.zeros(n, np.bool_)
        seen[0] = True
        stack = np.zeros(n, np.int64)
        top = 1
        while top > 0:
            top -= 1
            f = stack[top]
            for u in range(n):
                if seen[u]:
                    continue
                d = _dist(points, u, points[f])
                r = radii[u] if reverse else radii[f]
                if r >= d:
                    seen[u] = True
                    stack[top] = u
                    top += 1
        ok = True
        for u in range(n):
            ok = ok and seen[u]
        return ok

    @njit(cache=True, parallel=True)
    def _nb_grid_depth_max(points, radii, lo, pitch, shape):
        d = lo.shape[0]
        n0 = shape[0]
        tail = 1
        for k in range(1, d):
            tail *= shape[k]
        slab_best = np.full(n0, -1, np.int64)
        slab_flat = np.full(n0, -1, np.int64)
        n = points.shape[0]
        for i0 in prange(n0):
            q = np.zeros(d)
            best = -1
            bflat = -1
            for t in range(tail):
                rem = t
                for k in range(d - 1, 0, -1):
                    q[k] = lo[k] + (rem % shape[k]) * pitch
                    rem //= shape[k]
                q[0] = lo[0] + i0 * pitch
                c = 0
                for s in range(n):
                    if radii[s] >= _dist(points, s, q):
                        c += 1
                if c > best:
                    best = c
                    bflat = i0 * tail + t
            slab_best[i0] = best
            slab_flat[i0] = bflat
        best = -1
        bflat = -1
        for i0 in range(n0):
            if slab_best[i0] > best:
                best = slab_best[i0]
                bflat = slab_flat[i0]
        return best, bflat

    @njit(cache=True)
    def _nb_exact1d_scan(points, radii):
        x = points[:, 0]
        n = x.shape[0]
        best, kind, sensor = -1, -1, -1
        for s in range(n):
            for e in range(2):
                c = x[s] - radii[s] if e == 0 else x[s] + radii[s]
                cnt = 0
                own = False
                for t in range(n):
                    if radii[t] >= abs(x[t] - c):
                        cnt += 1
                        if t == s:
                            own = True
                if not own:
                    cnt += 1
                if cnt > best:
                    best = cnt
                    kind = CAND_ENDPOINT_LEFT if e == 0 else CAND_ENDPOINT_RIGHT
                    sensor = s
        for s in range(n):
            cnt = 0
            for t in range(n):
                if radii[t] >= abs(x[t] - x[s]):
                    cnt += 1
            if cnt > best:
                best, kind, sensor = cnt, CAND_CENTER, s
        return best, kind, sensor, 3 * n

    @njit(cache=True)
    def _nb_exact2d_scan(points, radii):
        n = points.shape[0]
        best, kind, bi, bj = -1, -1, -1, -1
        evaluated = 0
        for s in range(n):
            c = 0
            for t in range(n):
                if radii[t] >= _dist(points, t, points[s]):
                    c += 1
            evaluated += 1
            if c > best:
                best, kind, bi, bj = c, CAND_CENTER, s, -1
        q = np.zeros(2)
        for i in range(n):
            for j in range(i + 1, n):
                dx = points[j, 0] - points[i, 0]
                dy = points[j, 1] - points[i, 1]
                d2 = dx * dx + dy * dy
                if d2 == 0.0:
                    continue
                dd = np.sqrt(d2)
                a = (d2 + radii[i] * radii[i] - radii[j] * radii[j]) / (2.0 * dd)
                h2 = radii[i] * radii[i] - a * a
                if h2 < 0.0:
                    continue
                h = np.sqrt(h2)
                mx = points[i, 0] + a * dx / dd
                my = points[i, 1] + a * dy / dd
                ox = -dy / dd * h
                oy = dx / dd * h
                for e in range(2):
                    sgn = 1.0 if e == 0 else -1.0
                    q[0] = mx + sgn * ox
                    q[1] = my + sgn * oy
                    cnt = 0
                    own_i = False
                    own_j = False
                    for t in range(n):
                        if radii[t] >= _dist(points, t, q):
                            cnt += 1
                            if t == i:
                                own_i = True
                            if t == j:
                                own_j = True
                    if not own_i:
                        cnt += 1
                    if not own_j:
                        cnt += 1
                    evaluated += 1
                    if cnt > best:
                        best = cnt
                        kind = CAND_PAIR_PLUS if e == 0 else CAND_PAIR_MINUS
                        bi, bj = i, j
        return best, kind, bi, bj, evaluated

    @njit(cache=True)
    def _nb_assignment_depth(points, r, mode):
        n = points.shape[0]
        x = points[:, 0]
        best = 0
        if mode == _MODE_AT_SENSORS:
            for s in range(n):
                c = 0
                for t in range(n):
                    if r[t] >= _dist(points, t, points[s]):
                        c += 1
                if c > best:
                    best = c
            return best
        if mode == _MODE_EXACT1D:
            for s in range(n):
                for e in range(3):
                    if e == 0:
                        cand = x[s] - r[s]
                    elif e == 1:
                        cand = x[s] + r[s]
                    else:
                        cand = x[s]
                    c = 0
                    own = False
                    for t in range(n):
                        if r[t] >= abs(x[t] - cand):
                            c += 1
                            if t == s:
                                own = True
                    if e < 2 and not own:
                        c += 1
                    if c > best:
                        best = c
            return best
        # exact2d
        q = np.zeros(2)
        for s in range(n):
            c = 0
            for t in range(n):
                if r[t] >= _dist(points, t, points[s]):
                    c += 1
            if c > best:
                best = c
        for i in range(n):
            for j in range(i + 1, n):
                dx = points[j, 0] - points[i, 0]
                dy = points[j, 1] - points[i, 1]
                d2 = dx * dx + dy * dy
                if d2 == 0.0:
                    continue
                dd = np.sqrt(d2)
                a = (d2 + r[i] * r[i] - r[j] * r[j]) / (2.0 * dd)
                h2 = r[i] * r[i] - a * a
                if h2 < 0.0:
                    continue
                h = np.sqrt(h2)
                mx = points[i, 0] + a * dx / dd
                my = points[i, 1] + a * dy / dd
                ox = -dy / dd * h
                oy = dx / dd * h
                for e in range(2):
                    sgn = 1.0 if e == 0 else -1.0
                    q[0] = mx + sgn * ox
                    q[1] = my + sgn * oy
                    c = 0
                    own_i = False
                    own_j = False
                    for t in range(n):
                        if r[t] >= _dist(points, t, q):
                            c += 1
                            if t == i:
                                own_i = True
                            if t == j:
                                own_j = True
                    if not own_i:
                        c += 1
                    if not own_j:
                        c += 1
                    if c > best:
                        best = c
        return best

    @njit(cache=True)
    def _nb_min_interference_search(points, cand, ncand, pair_d, mode):
        n = points.shape[0]
        idx = np.zeros(n, np.int64)
        r = np.empty(n)
        for s in range(n):
            r[s] = cand[s, 0]
        best = np.int64(1 << 60)
        best_idx = np.zeros(n, np.int64)
        masks = np.zeros(n, np.int64)
        while True:
            for u in range(n):
                masks[u] = 0
            for u in range(n):
                for v in range(u + 1, n):
                    rm = r[u] if r[u] < r[v] else r[v]
                    if rm >= pair_d[u, v]:
                        masks[u] |= 1 << v
                        masks[v] |= 1 << u
            reach = np.int64(1)
            while True:
                nxt = reach
                for u in range(n):
                    if reach & (1 << u):
                        nxt |= masks[u]
                if nxt == reach:
                    break
                reach = nxt
            if reach == (1 << n) - 1:
                dep = _nb_assignment_depth(points, r, mode)
                if dep < best:
                    best = dep
                    for s in range(n):
                        best_idx[s] = idx[s]
            k = n - 1
            while k >= 0:
                idx[k] += 1
                if idx[k] < ncand[k]:
                    r[k] = cand[k, idx[k]]
                    break
                idx[k] = 0
                r[k] = cand[k, 0]
                k -= 1
            if k < 0:
                return best, best_idx


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

if USE_NUMBA:
    cover_counts = _nb_cover_counts
    prim_mst = _nb_prim_mst
    nn_indices = _nb_nn_indices
    components_sym = _nb_components_sym
    reach_directed = _nb_reach_directed
    grid_depth_max = _nb_grid_depth_max
    exact1d_scan = _nb_exact1d_scan
    exact2d_scan = _nb_exact2d_scan
    min_interference_search = _nb_min_interference_search
    BACKEND = "numba"
else:
    cover_counts = _np_cover_counts
    prim_mst = _np_prim_mst
    nn_indices = _np_nn_indices
    components_sym = _np_components_sym
    reach_directed = _np_reach_directed
    grid_depth_max = _np_grid_depth_max
    exact1d_scan = _np_exact1d_scan
    exact2d_scan = _np_exact2d_scan
    min_interference_search = _np_min_interference_search
    BACKEND = "numpy"


NUMPY_BACKEND = {
    "cover_counts": _np_cover_counts,
    "prim_mst": _np_prim_mst,
    "nn_indices": _np_nn_indices,
    "components_sym": _np_components_sym,
    "grid_depth_max": _np_grid_depth_max,
    "exact2d_scan": _np_exact2d_scan,
    "min_interference_search": _np_min_interference_search,
}

NUMBA_BACKEND = None
if HAVE_NUMBA:
    NUMBA_BACKEND = {
        "cover_counts": _nb_cover_counts,
        "prim_mst": _nb_prim_mst,
        "nn_indices": _nb_nn_indices,
        "components_sym": _nb_components_sym,
        "grid_depth_max": _nb_grid_depth_max,
        "exact2d_scan": _nb_exact2d_scan,
        "min_interference_search": _nb_min_interference_search,
    }
