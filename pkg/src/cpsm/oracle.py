"""Brute-force reference implementations.

Everything here is deliberately slow and simple: explicit walks for the
discrete Fréchet distance, enumeration of all vertex sequences over ``S``
for curve existence, and dense scans over candidate translations.  None of
it reuses the solvers it is meant to check; only the distance primitives
of :mod:`cpsm.geometry` are shared.
"""

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .frechet import continuous_frechet_decide
from .geometry import as_curve, as_points, pair_distances, segment_disk_interval

__all__ = [
    "OracleBudget",
    "OracleBudgetError",
    "GridScan",
    "brute_coupling_frechet",
    "brute_curve_exists",
    "grid_translation_scan",
    "candidate_point_scan",
    "oracle_optimum",
]

ORACLE_VARIANTS = ("discsubset", "discall", "contsubset", "contall", "contallns")


class OracleBudgetError(RuntimeError):
    """The requested enumeration exceeds the oracle's budget."""


@dataclass(frozen=True)
class OracleBudget:
    """Limits for the exhaustive oracles.

    ``max_curve_len=None`` means ``len(P) + len(S) + 1``.
    """

    max_curve_len: int = None
    grid_step: float = 0.01
    bbox_margin: float = 0.0
    max_sequences: int = 10**7
    max_grid_points: int = 10**7

    def __post_init__(self):
        if self.max_curve_len is not None and self.max_curve_len < 2:
            raise ValueError("max_curve_len must be at least 2")
        if self.grid_step <= 0:
            raise ValueError("grid_step must be positive")


def _oracle_variant(variant):
    v = str(variant).lower().replace("-", "").replace("_", "")
    aliases = {"discreteall": "discall", "discallpoints": "discall", "contallpoints": "contall"}
    v = aliases.get(v, v)
    if v not in ORACLE_VARIANTS:
        raise ValueError(f"unknown oracle variant {variant!r}; expected one of {ORACLE_VARIANTS}")
    return v


# -- discrete Fréchet by enumeration of paired walks ------------------------


def brute_coupling_frechet(P, Q):
    """Discrete Fréchet distance by exhaustive enumeration of paired walks.

    Every walk from ``(0, 0)`` to ``(n, m)`` is explored; the recursion is
    memoized on the current pair, which enumerates suffixes once each.
    Limited to curves of at most 8 vertices.
    """
    P = as_curve(P)
    Q = as_curve(Q)
    if len(P) > 8 or len(Q) > 8:
        raise OracleBudgetError("brute_coupling_frechet is limited to 8 vertices per curve")
    n, m = len(P) - 1, len(Q) - 1
    dist = pair_distances(P, Q).tolist()

    @functools.lru_cache(maxsize=None)
    def best(i, j):
        here = dist[i][j]
        if i == n and j == m:
            return here
        tails = []
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if i + di <= n and j + dj <= m:
                tails.append(best(i + di, j + dj))
        return max(here, min(tails))

    return best(0, 0)


# -- curve existence by enumeration -----------------------------------------


def _line_free(P, q, eps):
    """Free intervals of the line of ``q`` in the free space, per segment of ``P``."""
    out = []
    for i in range(len(P) - 1):
        f = segment_disk_interval(P[i], P[i + 1], q, eps)
        out.append(None if f is None else (i + f[0], i + f[1]))
    return out


def _extend_right(R, free):
    """Close a reachable set on one line under moving right through free space."""
    comps = _merge([f for f in free if f is not None], touch=1e-12)
    out = []
    for lo, hi in R:
        for a, b in comps:
            if a - 1e-12 <= hi <= b + 1e-12:
                hi = max(hi, b)
        out.append((lo, hi))
    return _merge(out)


def _merge(intervals, touch=0.0):
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1] + touch:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return tuple(out)


def _start_line(P, q, eps):
    free = _line_free(P, q, eps)
    if pair_distances(P[:1], [q])[0, 0] > eps:
        return ()
    return _extend_right(((0.0, 0.0),), free)


def _row_step(P, R, qa, qb, eps):
    """Reachable set on the line of ``qb`` given reachable ``R`` on the line of ``qa``."""
    n = len(P) - 1
    top = _line_free(P, qb, eps)
    out = []
    left_reach = None  # lowest reachable height on the current left edge
    for i in range(n):
        bottom = [(lo, hi) for lo, hi in R if hi >= i and lo <= i + 1]
        b_min = max(bottom[0][0], i) if bottom else None
        t = top[i]
        if t is not None:
            if left_reach is not None:
                out.append(t)
            elif b_min is not None and t[1] >= b_min:
                out.append((max(t[0], b_min), t[1]))
        # right edge of cell i: points of segment qa -> qb near P[i+1]
        edge = segment_disk_interval(qa, qb, P[i + 1], eps)
        if edge is None:
            left_reach = None
        elif b_min is not None:
            left_reach = edge[0]
        elif left_reach is not None and edge[1] >= left_reach:
            left_reach = max(edge[0], left_reach)
        else:
            left_reach = None
    return _extend_right(_merge(out), top)


def _restrict(R, c):
    out = []
    for lo, hi in R:
        lo2, hi2 = max(lo, c), min(hi, c + 1)
        if lo2 <= hi2:
            out.append((lo2, hi2))
    return tuple(out)


def brute_curve_exists(P, S, eps, variant, budget=None):
    """First curve on ``S`` that matches ``P``, shortest first.

    Curves are tried by length and, within one length, in lexicographic
    order of their point indices.

    Parameters
    ----------
    variant : str
        ``discsubset``, ``discall``, ``contsubset``, ``contall`` or
        ``contallns``.  The ``all`` variants require every point of ``S`` to
        appear; ``contallns`` additionally requires each point to appear at
        least once matched to a position on its nearest segment of ``P``.
    budget : OracleBudget, optional

    Returns
    -------
    numpy.ndarray or None
        Vertices of the first accepted curve.
    """
    variant = _oracle_variant(variant)
    budget = budget or OracleBudget()
    P = as_curve(P)
    S = as_points(S)
    if P.shape[1] != S.shape[1]:
        raise ValueError("dimension mismatch")
    k = len(S)
    L = budget.max_curve_len or len(P) + k + 1
    if k**L > budget.max_sequences:
        raise OracleBudgetError(f"{k}^{L} sequences exceed the oracle budget")
    seq = _discrete_search(P, S, eps, variant, L) if variant.startswith("disc") else _continuous_search(P, S, eps, variant, L)
    return None if seq is None else S[list(seq)]


def _discrete_search(P, S, eps, variant, L):
    Pl, Sl = P.tolist(), S.tolist()
    n, k = len(Pl), len(Sl)
    need_all = variant == "discall"
    near = (pair_distances(S, P) <= eps).tolist()
    full = (1 << k) - 1
    failed = set()

    def extend(R, s):
        # rows of P reachable when the walk has just placed point s
        out = []
        for i in range(n):
            ok = near[s][i] and (i in R or i - 1 in R or (out and out[-1] == i - 1))
            if ok:
                out.append(i)
        return frozenset(out)

    def dfs(seq, R, seen):
        if n - 1 in R and (not need_all or seen == full):
            Q = S[list(seq)]
            if len(Q) > 8 or n > 8 or brute_coupling_frechet(P, Q) <= eps:
                return seq
        if len(seq) >= cap or (R, seen, cap - len(seq)) in failed:
            return None
        for s in range(k):
            R2 = extend(R, s)
            if R2:
                hit = dfs(seq + (s,), R2, seen | (1 << s) if need_all else 0)
                if hit is not None:
                    return hit
        failed.add((R, seen, cap - len(seq)))
        return None

    starts = []
    for s in range(k):
        if near[s][0]:
            R0 = frozenset(itertools.takewhile(lambda i: near[s][i], range(n)))
            starts.append(((s,), R0, 1 << s if need_all else 0))
    for cap in range(1, L + 1):
        for start in starts:
            hit = dfs(*start)
            if hit is not None:
                return hit
    return None


def _continuous_search(P, S, eps, variant, L):
    Pp = P if len(P) > 1 else np.vstack([P, P])
    Pl, Sl = Pp.tolist(), S.tolist()
    n, k = len(Pl) - 1, len(Sl)
    need_all = variant in ("contall", "contallns")
    ns = variant == "contallns"
    if ns:
        c = _nearest_segments(Pp, S)
    full = (1 << k) - 1
    failed = set()

    def accepts(seq, R, seen):
        if not R or R[-1][1] < n or (need_all and seen != full):
            return False
        Q = S[list(seq)]
        # the propagation here is independent of the certified solvers;
        # cross-check with the free-space decision as well
        return bool(continuous_frechet_decide(P, Q, eps)) if not ns else True

    def dfs(seq, R, seen):
        if accepts(seq, R, seen):
            return seq
        if len(seq) >= cap or (R, seen, cap - len(seq)) in failed:
            return None
        last = Sl[seq[-1]]
        for s in range(k):
            R2 = _row_step(Pl, R, last, Sl[s], eps)
            if not R2:
                continue
            options = [(R2, seen | (1 << s))] if not ns else _ns_options(R2, s, seen, c, Pl, Sl, eps)
            for R3, seen3 in options:
                hit = dfs(seq + (s,), R3, seen3)
                if hit is not None:
                    return hit
        failed.add((R, seen, cap - len(seq)))
        return None

    starts = []
    for s in range(k):
        R0 = _start_line(Pl, Sl[s], eps)
        if R0:
            options = [(R0, 1 << s)] if not ns else _ns_options(R0, s, 0, c, Pl, Sl, eps)
            starts.extend(((s,), R, seen) for R, seen in options)
    for cap in range(1, L + 1):
        for start in starts:
            hit = dfs(*start)
            if hit is not None:
                return hit
    return None


def _ns_options(R, s, seen, c, Pl, Sl, eps):
    """Branch on whether this occurrence of ``s`` is its nearest-segment visit."""
    out = [(R, seen)]
    inside = _restrict(R, c[s])
    if inside:
        out.append((_extend_right(inside, _line_free(Pl, Sl[s], eps)), seen | (1 << s)))
    return out


def _nearest_segments(P, S):
    # direct scan, ties to the lower index
    out = []
    for s in S:
        best, arg = math.inf, 0
        for i in range(len(P) - 1):
            a, b = P[i], P[i + 1]
            d = b - a
            dd = float(d @ d)
            u = 0.0 if dd == 0 else min(1.0, max(0.0, float((s - a) @ d) / dd))
            dist = float(np.linalg.norm(s - (a + u * d)))
            if dist < best * (1 - 1e-12) - 1e-15:
                best, arg = dist, i
        out.append(arg)
    return out


def oracle_optimum(P, S, variant, tol=1e-6, budget=None):
    """Smallest ``eps`` accepted by :func:`brute_curve_exists`, to within ``tol``.

    Discrete variants are exact: the optimum is one of the vertex-to-point
    distances.  Continuous variants are bisected.
    """
    variant = _oracle_variant(variant)
    P = as_curve(P)
    S = as_points(S)
    dist = pair_distances(P, S)
    if variant.startswith("disc"):
        cand = np.unique(dist)
        lo, hi = 0, len(cand) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if brute_curve_exists(P, S, cand[mid], variant, budget) is not None:
                hi = mid
            else:
                lo = mid + 1
        return float(cand[lo])
    lo, hi = 0.0, float(dist.max()) + 1e-9
    while brute_curve_exists(P, S, hi, variant, budget) is None:
        hi *= 2
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if brute_curve_exists(P, S, mid, variant, budget) is not None:
            hi = mid
        else:
            lo = mid
    return hi


# -- translations ------------------------------------------------------------


@dataclass
class GridScan:
    """Outcome of a grid scan: best grid translation and its value.

    ``margin`` is ``eps - best_value`` plus the rounding slack of the scan;
    it is nonnegative exactly when the best grid point was accepted.
    """

    translation: np.ndarray
    best_value: float
    margin: float
    points: int


def _discrete_value(P, S, T, variant):
    """Fixed-curve discrete optimum at each translation in ``T``."""
    d = np.linalg.norm((P[None, :, None, :] + T[:, None, None, :]) - S[None, None, :, :], axis=3)
    val = d.min(axis=2).max(axis=1)
    if variant == "discall":
        val = np.maximum(val, d.min(axis=1).max(axis=1))
    return val


def grid_translation_scan(P, S, eps, variant="discsubset", budget=None, report=False):
    """Scan a grid of translations for one at which the discrete decision accepts.

    The grid covers the bounding box of ``{s - P_i}`` inflated by
    ``eps + budget.bbox_margin`` at step ``budget.grid_step``, plus every
    translation that puts a vertex on a point.  Acceptance allows a relative
    ``1e-12`` for rounding in the grid coordinates.  Returns the
    accepted translation of smallest value (or ``None``); with
    ``report=True`` returns a :class:`GridScan` instead.
    """
    variant = _oracle_variant(variant)
    if not variant.startswith("disc"):
        raise ValueError("grid_translation_scan supports the discrete variants")
    budget = budget or OracleBudget()
    P = as_curve(P)
    S = as_points(S)
    C = (S[None, :, :] - P[:, None, :]).reshape(-1, P.shape[1])
    pad = eps + budget.bbox_margin
    lo = C.min(axis=0) - pad
    hi = C.max(axis=0) + pad
    axes = [np.arange(a, b + budget.grid_step * 0.5, budget.grid_step) for a, b in zip(lo, hi)]
    count = math.prod(len(a) for a in axes)
    if count > budget.max_grid_points:
        raise OracleBudgetError(f"{count} grid points exceed the oracle budget")
    # translations that align a vertex with a point are always included
    T = np.vstack([np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, P.shape[1]), C])
    best_t, best_v = None, math.inf
    for chunk in range(0, len(T), 20000):
        v = _discrete_value(P, S, T[chunk : chunk + 20000], variant)
        j = int(v.argmin())
        if v[j] < best_v:
            best_v, best_t = float(v[j]), T[chunk + j]
    # grid coordinates carry rounding from the float arithmetic above
    limit = eps * (1 + 1e-12) + 1e-12
    if report:
        return GridScan(best_t, best_v, limit - best_v, len(T))
    return best_t if best_v <= limit else None


def _rational_sign(a, b, w):
    """Sign of ``a + b*sqrt(w)`` for rationals, ``w >= 0``."""
    sa = (a > 0) - (a < 0)
    sb = ((b > 0) - (b < 0)) if w else 0
    if sb == 0 or sa == sb:
        return sa or sb
    if sa == 0:
        return sb
    t = a * a - b * b * w
    return sa if t > 0 else (sb if t < 0 else 0)


def candidate_point_scan(P, S, eps, variant="subset"):
    """Naive translation decision: test every center and circle intersection.

    Disks of radius ``eps`` around ``s - P_i``; a feasible translation exists
    iff one of these candidate points lies in a disk of every colour (the
    topmost point of a nonempty feasible region is one of them).  Exact
    rational arithmetic throughout, with a float prefilter.

    Returns the candidate point as floats, or ``None``.
    """
    v = str(variant).lower().replace("-", "")
    if v in ("subset", "discsubset"):
        allpts = False
    elif v in ("allpoints", "discall"):
        allpts = True
    else:
        raise ValueError(f"unknown variant {variant!r}")
    Pe = [tuple(Fraction(repr(float(c))) for c in row) for row in np.asarray(P, dtype=float).tolist()]
    Se = []
    for row in np.asarray(S, dtype=float).tolist():
        t = tuple(Fraction(repr(float(c))) for c in row)
        if t not in Se:
            Se.append(t)
    r = Fraction(repr(float(eps))) if not isinstance(eps, Fraction) else eps
    r2 = r * r
    n1 = len(Pe)
    ncol = n1 + (len(Se) if allpts else 0)
    centers, colors = [], []
    for i, p in enumerate(Pe):
        for j, s in enumerate(Se):
            centers.append((s[0] - p[0], s[1] - p[1]))
            colors.append({i, n1 + j} if allpts else {i})
    # each candidate: (mx, my, ax, ay, w) meaning (mx + ax sqrt w, my + ay sqrt w)
    cands = [(cx, cy, 0, 0, Fraction(0)) for cx, cy in centers]
    for a, b in itertools.combinations(range(len(centers)), 2):
        dx = centers[b][0] - centers[a][0]
        dy = centers[b][1] - centers[a][1]
        D2 = dx * dx + dy * dy
        if D2 == 0 or D2 > 4 * r2:
            continue
        w = r2 / D2 - Fraction(1, 4)
        mx = (centers[a][0] + centers[b][0]) / 2
        my = (centers[a][1] + centers[b][1]) / 2
        cands.append((mx, my, -dy, dx, w))
        cands.append((mx, my, dy, -dx, w))
    fc = np.array([[float(c[0]), float(c[1])] for c in centers])
    fr2 = float(r2)
    for mx, my, ax, ay, w in cands:
        sw = math.sqrt(float(w))
        px, py = float(mx) + float(ax) * sw, float(my) + float(ay) * sw
        g = (fc[:, 0] - px) ** 2 + (fc[:, 1] - py) ** 2 - fr2
        scale = 1e-9 * (fr2 + (abs(px) + abs(py) + 1) ** 2)
        got = set()
        for d in range(len(centers)):
            if g[d] < -scale:
                inside = True
            elif g[d] > scale:
                inside = False
            else:
                ex, ey = mx - centers[d][0], my - centers[d][1]
                A = ex * ex + ey * ey + (ax * ax + ay * ay) * w - r2
                B = 2 * (ex * ax + ey * ay)
                inside = _rational_sign(A, B, w) <= 0
            if inside:
                got |= colors[d]
        if len(got) == ncol:
            return np.array([px, py])
    return None
