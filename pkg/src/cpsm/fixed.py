"""Curve/point-set matching with the curve held fixed.

All variants are non-unique: the constructed curve ``Q`` may visit a point
of ``S`` any number of times.

* discrete Subset / All-points: closed-form coverage characterisations;
* continuous Subset: reachability propagated segment by segment along ``P``;
* continuous All-points: decided only for curves that visit every point at
  its nearest segment of ``P`` (NS-compliant curves), which gives a
  3-approximation of the unrestricted optimum.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .frechet import Coupling, continuous_frechet_decide
from .geometry import TANGENT_TOL, as_curve, as_points, diameter, pair_distances

__all__ = [
    "MatchResult",
    "ClosestSegmentIndex",
    "discrete_subset_decide",
    "discrete_allpoints_decide",
    "discrete_cpsm_optimize",
    "continuous_subset_decide",
    "continuous_subset_optimize",
    "closest_segments",
    "ns_compliant_decide",
    "allpoints_3approx",
]

VARIANTS = ("subset", "allpoints")


@dataclass
class MatchResult:
    """A curve on the point set together with the bound it achieves.

    ``indices`` are positions in ``S`` of the vertices of ``curve``.
    ``witness`` is a :class:`~cpsm.frechet.Coupling` for discrete variants
    and a :class:`~cpsm.frechet.Reachability` for continuous ones.
    """

    curve: np.ndarray
    epsilon: float
    indices: tuple = ()
    witness: object = field(default=None, repr=False)
    translation: np.ndarray = None


@dataclass(frozen=True)
class ClosestSegmentIndex:
    """For every point of ``S``: its nearest segment of ``P`` and the distance.

    Segment ``j`` joins vertices ``j`` and ``j + 1`` (0-based).
    """

    index: np.ndarray
    distance: np.ndarray

    def __getitem__(self, i):
        return int(self.index[i])


def check_variant(variant):
    v = str(variant).lower().replace("-", "").replace("_", "")
    if v not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return v


def _inputs(P, S, eps=None):
    P = as_curve(P)
    S = as_points(S)
    if P.shape[1] != S.shape[1]:
        raise ValueError(f"dimension mismatch: curve is {P.shape[1]}D, points are {S.shape[1]}D")
    if eps is not None and eps < 0:
        raise ValueError("eps must be nonnegative")
    return P, S


def _vertex_distances(P, S):
    return pair_distances(P, S)


# -- discrete ---------------------------------------------------------------


def discrete_subset_decide(P, S, eps):
    """Curve on ``S`` within discrete Fréchet ``eps`` of ``P``, or ``None``.

    Feasible exactly when every vertex of ``P`` has a point of ``S`` within
    ``eps``; the witness takes each vertex's nearest point in lockstep.
    """
    P, S = _inputs(P, S, eps)
    dist = _vertex_distances(P, S)
    nearest = dist.argmin(axis=1)
    best = dist[np.arange(len(P)), nearest]
    if np.any(best > eps):
        return None
    steps = tuple((i + 1, i + 1) for i in range(len(P)))
    return MatchResult(S[nearest], float(best.max()), tuple(nearest.tolist()), Coupling(steps))


def discrete_allpoints_decide(P, S, eps):
    """Curve visiting every point of ``S`` within discrete Fréchet ``eps``.

    Feasible exactly when each vertex of ``P`` has a point within ``eps``
    and each point has a vertex within ``eps``.  At vertex ``i`` the witness
    visits the nearest point and then every not yet visited point within
    ``eps`` while ``P`` waits at ``i``.
    """
    P, S = _inputs(P, S, eps)
    dist = _vertex_distances(P, S)
    if np.any(dist.min(axis=1) > eps) or np.any(dist.min(axis=0) > eps):
        return None
    visited = np.zeros(len(S), dtype=bool)
    order = []
    steps = []
    for i in range(len(P)):
        near = int(dist[i].argmin())
        block = [near] + [j for j in np.flatnonzero(dist[i] <= eps).tolist() if j != near and not visited[j]]
        visited[block] = True
        for j in block:
            order.append(j)
            steps.append((i + 1, len(order)))
    achieved = float(max(dist[a - 1, order[b - 1]] for a, b in steps))
    return MatchResult(S[order], achieved, tuple(order), Coupling(tuple(steps)))


_DISCRETE = {"subset": discrete_subset_decide, "allpoints": discrete_allpoints_decide}


def discrete_cpsm_optimize(P, S, variant="subset"):
    """Smallest feasible ``eps`` for a discrete variant and a witness curve.

    The optimum is one of the vertex-to-point distances, so a binary search
    over the sorted distinct distances with the decision finds it exactly.
    """
    decide = _DISCRETE[check_variant(variant)]
    P, S = _inputs(P, S)
    cand = np.unique(_vertex_distances(P, S))
    lo, hi = 0, len(cand) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if decide(P, S, cand[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    eps = float(cand[lo])
    return eps, decide(P, S, eps)


# -- continuous -------------------------------------------------------------


def _segment_intervals(a, b, pts, eps):
    """Free parameter range on segment ``a -> b`` for each point, NaN if none."""
    d = b - a
    dd = float(d @ d)
    w = a[None, :] - pts
    cc = np.einsum("ij,ij->i", w, w)
    cb = np.einsum("ij,ij->i", b[None, :] - pts, b[None, :] - pts)
    k = len(pts)
    return _solve(np.full(k, dd), w @ d, cc, cb, eps)


def _solve(dd, ax, cc, cb, eps):
    # roots of dd u^2 + 2 ax u + (cc - e2) <= 0 clipped to [0, 1]; the end
    # points a and b (squared distances cc, cb) are tested like pair_distances
    e2 = eps * eps
    a_in = np.sqrt(cc) <= eps
    b_in = np.sqrt(cb) <= eps
    disc = ax * ax - dd * (cc - e2)
    scale = np.maximum(np.maximum(ax * ax, dd * (cc + e2)), 1e-300)
    ok = disc >= -TANGENT_TOL * scale
    root = np.sqrt(np.maximum(disc, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        lo = (-ax - root) / dd
        hi = (-ax + root) / dd
    ok &= (hi >= -TANGENT_TOL) & (lo <= 1.0 + TANGENT_TOL) & (dd > 0.0)
    lo = np.where(a_in, 0.0, np.clip(lo, 0.0, 1.0))
    hi = np.where(b_in, 1.0, np.clip(hi, 0.0, 1.0))
    # a single inside end point survives a numerically missed disk
    lo = np.where(ok | a_in, lo, np.where(b_in, 1.0, np.nan))
    hi = np.where(ok | b_in, hi, np.where(a_in, 0.0, np.nan))
    # degenerate segments are a single point: fully free or fully blocked
    lo = np.where(dd == 0.0, np.where(a_in, 0.0, np.nan), lo)
    hi = np.where(dd == 0.0, np.where(a_in, 1.0, np.nan), np.maximum(hi, lo))
    return lo, hi


def _pair_intervals(S, p, eps):
    """Free parameter range on every segment ``S[s] -> S[v]`` around ``p``.

    Returns two ``(k, k)`` arrays; a degenerate segment ``s -> s`` is fully
    free or fully blocked.
    """
    d = S[None, :, :] - S[:, None, :]
    w = (S - p)[:, None, :]
    dd = np.einsum("ijk,ijk->ij", d, d)
    ax = np.einsum("ijk,ijk->ij", np.broadcast_to(w, d.shape), d)
    sq = np.einsum("ij,ij->i", S - p, S - p)
    cc = np.broadcast_to(sq[:, None], dd.shape)
    cb = np.broadcast_to(sq[None, :], dd.shape)
    with np.errstate(divide="ignore", invalid="ignore"):
        return _solve(dd, ax, cc, cb, eps)


_INIT, _JUMP, _CROSS, _BUCKET = 0, 1, 2, 3


class _Propagation:
    """Reachability of points of ``S`` along the segments of ``P``.

    ``reach[v]`` is the smallest parameter on the current segment at which
    a partial curve ending at ``v`` matches the prefix of ``P``; ``inf``
    marks unreachable.  Within one segment any reachable point can jump to
    any point whose free interval extends past the current minimum, because
    the free space of a single cell is convex.  Across segment boundaries a
    greedy lowest crossing height is carried per pair ``(s, v)``.
    """

    def __init__(self, P, S, eps):
        self.P = P
        self.S = S
        self.eps = float(eps)
        self.n = len(P) - 1
        k = len(S)
        self.k = k
        self.lo = []
        self.hi = []
        for i in range(self.n):
            lo, hi = _segment_intervals(P[i], P[i + 1], S, self.eps)
            self.lo.append(lo)
            self.hi.append(hi)
        self.kind = []
        self.src = []
        self.src_seg = []
        self.chains = {}

    def start(self):
        k = self.k
        near = np.linalg.norm(self.S - self.P[0], axis=1) <= self.eps
        reach = np.where(near & ~np.isnan(self.lo[0]), 0.0, np.inf)
        self.kind.append(np.full(k, _INIT))
        self.src.append(np.full(k, -1))
        self.src_seg.append(np.full(k, -1))
        return reach

    def jump(self, i, reach):
        if not np.isfinite(reach).any():
            return reach
        s = int(np.argmin(reach))
        pm = reach[s]
        lo, hi = self.lo[i], self.hi[i]
        with np.errstate(invalid="ignore"):
            cand = np.where(hi >= pm, np.maximum(lo, pm), np.inf)
        better = cand < reach
        reach = np.where(better, cand, reach)
        self.kind[i][better] = _JUMP
        self.src[i][better] = s
        self.src_seg[i][better] = i
        return reach

    def cross(self, i, reach, Y, start):
        """Carry states from segment ``i`` over vertex ``i + 1``."""
        A, B = _pair_intervals(self.S, self.P[i + 1], self.eps)
        fresh = np.isfinite(reach)[:, None]
        with np.errstate(invalid="ignore"):
            Y = np.where(fresh, A, np.maximum(Y, A))
            start = np.where(fresh, i, start)
            valid = Y <= B
        Y = np.where(valid, Y, np.inf)
        lo_next = self.lo[i + 1]
        arrive = valid.any(axis=0) & ~np.isnan(lo_next)
        k = self.k
        new = np.where(arrive, lo_next, np.inf)
        src = np.where(arrive, valid.argmax(axis=0), -1)
        kind = np.where(arrive, _CROSS, _INIT)
        src_seg = np.where(arrive, start[src, np.arange(k)], -1)
        self.kind.append(kind)
        self.src.append(src)
        self.src_seg.append(src_seg)
        return new, Y, start

    def finish(self, reach):
        near_end = np.linalg.norm(self.S - self.P[-1], axis=1) <= self.eps
        ok = np.flatnonzero(np.isfinite(reach) & near_end)
        return int(ok[0]) if len(ok) else None

    def bucket(self, i, ok, pre, visits):
        """Replace the states of segment ``i`` by those after a bucket visit."""
        self.chains[i] = (pre, visits, (self.kind[i], self.src[i], self.src_seg[i]))
        self.kind[i] = np.where(ok, _BUCKET, _INIT)
        self.src[i] = np.full(self.k, -1)
        self.src_seg[i] = np.full(self.k, -1)

    def path(self, v, seg):
        seq = [v]
        tables = (self.kind[seg], self.src[seg], self.src_seg[seg])
        while True:
            kind, src, src_seg = tables
            if kind[v] == _INIT:
                break
            if kind[v] == _BUCKET:
                pre, visits, tables = self.chains[seg]
                seq.extend(reversed(visits))
                seq.append(pre)
                v = pre
                continue
            v, nxt = int(src[v]), int(src_seg[v])
            # jumps stay on the same segment and must keep its pre-bucket tables
            if nxt != seg:
                seg = nxt
                tables = (self.kind[seg], self.src[seg], self.src_seg[seg])
            seq.append(v)
        seq.reverse()
        out = [seq[0]]
        for v in seq[1:]:
            if v != out[-1]:
                out.append(v)
        return out


def _pad(P):
    return np.vstack([P, P]) if len(P) == 1 else P


def _continuous_result(P, S, order, eps):
    Q = S[order]
    return MatchResult(Q, float(eps), tuple(order), continuous_frechet_decide(P, Q, eps))


def continuous_subset_decide(P, S, eps):
    """Curve on ``S`` within continuous Fréchet ``eps`` of ``P``, or ``None``.

    Runs in ``O(n k^2)`` numpy work: one ``(k, k)`` sweep of pair states per
    vertex of ``P``.
    """
    P, S = _inputs(P, S, eps)
    prop = _Propagation(_pad(P), S, eps)
    k = len(S)
    reach = prop.jump(0, prop.start())
    Y = np.full((k, k), np.inf)
    start = np.full((k, k), -1)
    for i in range(prop.n - 1):
        if not np.isfinite(reach).any() and not np.isfinite(Y).any():
            return None
        reach, Y, start = prop.cross(i, reach, Y, start)
        reach = prop.jump(i + 1, reach)
    v = prop.finish(reach)
    if v is None:
        return None
    return _continuous_result(P, S, prop.path(v, prop.n - 1), eps)


def _bisect(decide, lo, hi, tol):
    """Smallest accepted value in ``[lo, hi]`` to within ``tol``."""
    res = decide(lo)
    if res is not None:
        return lo, res
    best = decide(hi)
    while best is None:
        # hi was not an upper bound after all; only rounding can cause this
        lo, hi = hi, 2 * hi + tol
        best = decide(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        res = decide(mid)
        if res is not None:
            hi, best = mid, res
        else:
            lo = mid
    return hi, best


def _default_tol(P, S):
    return 1e-9 * max(diameter(P, S), 1.0)


def continuous_subset_optimize(P, S, tol=None):
    """Smallest ``eps`` (to within ``tol``) accepted by :func:`continuous_subset_decide`."""
    P, S = _inputs(P, S)
    tol = _default_tol(P, S) if tol is None else tol
    if tol <= 0:
        raise ValueError("tol must be positive")
    end_dist = _vertex_distances(P[[0, -1]], S).min(axis=1)
    lo = float(end_dist.max())
    hi = max(diameter(P, S), lo)
    return _bisect(lambda e: continuous_subset_decide(P, S, e), lo, hi, tol)


def _segment_distances(P, S):
    """``(k, n)`` distances from each point to each segment of ``P``."""
    P = _pad(P)
    a = P[:-1]
    d = P[1:] - a
    dd = np.einsum("ij,ij->i", d, d)
    w = S[:, None, :] - a[None, :, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        u = np.einsum("kij,ij->ki", w, d) / dd
    u = np.where(dd > 0, u, 0.0)
    foot = a[None] + np.clip(u, 0.0, 1.0)[..., None] * d[None]
    out = np.linalg.norm(S[:, None, :] - foot, axis=2)
    # clamp exactly to the endpoints so shared vertices tie exactly
    at_start = np.linalg.norm(S[:, None, :] - a[None], axis=2)
    at_end = np.linalg.norm(S[:, None, :] - P[1:][None], axis=2)
    out = np.where(u <= 0, at_start, out)
    return np.where(u >= 1, at_end, out)


def closest_segments(P, S):
    """Index of the nearest segment of ``P`` for every point of ``S``.

    Ties (up to a relative ``1e-12``) go to the smaller index.
    """
    P, S = _inputs(P, S)
    dist = _segment_distances(P, S)
    best = dist.min(axis=1)
    tied = dist <= best[:, None] * (1 + 1e-12) + 1e-15
    idx = tied.argmax(axis=1)
    return ClosestSegmentIndex(idx, best)


def ns_compliant_decide(P, S, eps):
    """Curve visiting every point of ``S`` at its nearest segment, or ``None``.

    The curve must stay within continuous Fréchet ``eps`` of ``P``.  Points
    are bucketed by nearest segment; on each segment the bucket is visited
    in order of where the point's free interval begins, starting from the
    lowest reachable position.  Any point of ``S`` may serve as a connector
    between buckets.
    """
    P, S = _inputs(P, S, eps)
    Pp = _pad(P)
    cs = closest_segments(P, S)
    if np.any(cs.distance > eps):
        return None
    prop = _Propagation(Pp, S, eps)
    k = len(S)
    buckets = [[] for _ in range(prop.n)]
    for s, seg in enumerate(cs.index.tolist()):
        buckets[seg].append(s)
    for i, b in enumerate(buckets):
        lo = prop.lo[i]
        if any(np.isnan(lo[s]) for s in b):
            return None
        b.sort(key=lambda s: (lo[s], s))

    reach = prop.start()
    Y = np.full((k, k), np.inf)
    start = np.full((k, k), -1)
    for i in range(prop.n):
        if i > 0:
            reach, Y, start = prop.cross(i - 1, reach, Y, start)
        reach = prop.jump(i, reach)
        if buckets[i]:
            if not np.isfinite(reach).any():
                return None
            pre = int(np.argmin(reach))
            x = reach[pre]
            lo, hi = prop.lo[i], prop.hi[i]
            for s in buckets[i]:
                x = max(x, lo[s])
                if x > hi[s]:
                    return None
            with np.errstate(invalid="ignore"):
                ok = hi >= x
            reach = np.where(ok, np.maximum(lo, x), np.inf)
            prop.bucket(i, ok, pre, list(buckets[i]))
            # pairs crossing this segment would skip its bucket
            Y = np.full((k, k), np.inf)
    v = prop.finish(reach)
    if v is None:
        return None
    return _continuous_result(P, S, prop.path(v, prop.n - 1), eps)


def allpoints_3approx(P, S, tol=None):
    """3-approximation of the continuous All-points optimum.

    Bisects :func:`ns_compliant_decide`.  The returned ``eps_hat`` satisfies
    ``opt <= eps_hat <= 3 * opt + tol`` where ``opt`` is the best value over
    all curves visiting every point.
    """
    P, S = _inputs(P, S)
    tol = _default_tol(P, S) if tol is None else tol
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo = float(closest_segments(P, S).distance.max())
    hi = max(diameter(P, S), lo)
    return _bisect(lambda e: ns_compliant_decide(P, S, e), lo, hi, tol)
