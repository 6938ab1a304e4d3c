"""Plane sweep for the discrete translation problem in the plane.

A translation ``t`` puts vertex ``P_i`` within ``eps`` of point ``s`` exactly
when ``t`` lies in the disk of radius ``eps`` around ``s - P_i``.  Colour each
disk by its vertex (and, for All-points, also by its point); a translation
is feasible iff it lies in at least one disk of every colour.  The sweep
moves a horizontal line from top to bottom over the disk arrangement,
keeping for every interval between consecutive arcs a membership count per
colour and the number of colours with nonzero count.

Two arithmetic modes share one sweep:

* float mode works on doubles and groups events that agree to ``1e-12``
  of the instance scale;
* exact mode takes rational centers and a rational squared radius; every
  event coordinate is then of the form ``a + b*sqrt(q)`` and is compared
  exactly (see :mod:`cpsm.exact`), which makes degenerate inputs
  (tangencies, cocircular centers, shared tops) deterministic.
"""

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import Surd, rational_between, sign_surd, sqrt_to_float, to_fraction
from .fixed import (
    MatchResult,
    _inputs,
    check_variant,
    discrete_allpoints_decide,
    discrete_subset_decide,
)

__all__ = [
    "ColoredDisk",
    "CriticalRadius",
    "SweepInterval",
    "build_disks",
    "num_colors",
    "sweep_decide",
    "tcpsm_sweep_decide",
    "critical_radii",
    "sweep_optimize",
]

TOP, CROSS, BOTTOM = 0, 1, 2
_KIND_NAMES = {TOP: "top", CROSS: "cross", BOTTOM: "bottom"}


@dataclass(frozen=True)
class ColoredDisk:
    """Disk of translations, tagged with the colours it covers.

    In exact mode ``center`` holds Fractions and ``radius_sq`` is the exact
    squared radius; ``radius`` is always a float.
    """

    center: tuple
    radius: float
    colors: frozenset
    radius_sq: object = None

    @property
    def exact(self):
        return isinstance(self.center[0], Fraction)


@dataclass
class SweepInterval:
    """Sweep-line interval between two consecutive arcs."""

    counts: list
    nonzero: int

    def copy(self):
        return SweepInterval(list(self.counts), self.nonzero)

    def add(self, colors, delta):
        counts = self.counts
        for c in colors:
            before = counts[c]
            counts[c] = before + delta
            if before == 0:
                self.nonzero += 1
            elif counts[c] == 0:
                self.nonzero -= 1


@dataclass(frozen=True)
class CriticalRadius:
    """A radius at which the disk arrangement changes combinatorially.

    ``kind`` is ``"zero"``, ``"pair"`` (half the distance of two centers) or
    ``"triple"`` (circumradius of three centers); ``ids`` index the
    distinct centers that generate it.
    """

    value: float
    kind: str
    ids: tuple
    value_sq: object = None


def num_colors(P, S, variant):
    n1 = len(P)
    return n1 if check_variant(variant) == "subset" else n1 + len(S)


def build_disks(P, S, eps, variant="subset", exact=False):
    """One disk per (vertex, point) pair, centered at ``s - P_i``.

    Subset disks carry the vertex colour ``i``; All-points disks also carry
    the point colour ``n + 1 + j``.  Disks with coincident centers are merged
    and carry the union of colours.  With ``exact=True`` coordinates and
    ``eps`` are read as exact decimals; ``eps`` may also be given as
    ``("sq", r2)`` to pass an exact squared radius directly.
    """
    variant = check_variant(variant)
    if exact:
        Pe, Se = _exact_coords(P, dedupe=False), _exact_coords(S)
        if {len(p) for p in Pe} | {len(s) for s in Se} != {2}:
            raise ValueError("the sweep works in the plane only (D = 2)")
        if isinstance(eps, tuple) and eps[0] == "sq":
            r2 = to_fraction(eps[1])
        else:
            e = to_fraction(eps)
            if e < 0:
                raise ValueError("eps must be nonnegative")
            r2 = e * e
        radius = math.sqrt(r2)
    else:
        P, S = _inputs(P, S, eps)
        if P.shape[1] != 2:
            raise ValueError("the sweep works in the plane only (D = 2)")
        Pe, Se = P.tolist(), S.tolist()
        r2 = None
        radius = float(eps)
    n1 = len(Pe)
    merged = {}
    for i, p in enumerate(Pe):
        for j, s in enumerate(Se):
            c = (s[0] - p[0], s[1] - p[1])
            cols = {i} if variant == "subset" else {i, n1 + j}
            merged.setdefault(c, set()).update(cols)
    return [ColoredDisk(c, radius, frozenset(cols), r2) for c, cols in merged.items()]


def _exact_coords(arr, dedupe=True):
    rows = arr.tolist() if isinstance(arr, np.ndarray) else arr
    out = []
    seen = set()
    for row in rows:
        t = tuple(to_fraction(v) for v in row)
        if not dedupe or t not in seen:
            seen.add(t)
            out.append(t)
    return out


# -- arithmetic kernels -----------------------------------------------------


class _FloatKernel:
    def __init__(self, disks):
        self.cx = np.array([d.center[0] for d in disks], dtype=float)
        self.cy = np.array([d.center[1] for d in disks], dtype=float)
        self.r = float(disks[0].radius)
        self.r2 = self.r * self.r
        scale = max(float(np.abs(self.cx).max()), float(np.abs(self.cy).max())) + self.r + 1.0
        self.tol = 1e-12 * scale

    def events(self):
        cx, cy, r = self.cx, self.cy, self.r
        ev = []
        for d in range(len(cx)):
            ev.append((float(cy[d] + r), float(cx[d]), TOP, (d,)))
            ev.append((float(cy[d] - r), float(cx[d]), BOTTOM, (d,)))
        i, j = np.triu_indices(len(cx), 1)
        dx = cx[j] - cx[i]
        dy = cy[j] - cy[i]
        D2 = dx * dx + dy * dy
        hit = (D2 <= 4 * self.r2 * (1 + 1e-12)) & (D2 > 0)
        i, j, dx, dy, D2 = i[hit], j[hit], dx[hit], dy[hit], D2[hit]
        w = np.sqrt(np.maximum(self.r2 / D2 - 0.25, 0.0))
        mx = (cx[i] + cx[j]) / 2
        my = (cy[i] + cy[j]) / 2
        for a, b, x0, y0, ux, uy in zip(
            i.tolist(), j.tolist(), mx.tolist(), my.tolist(), (-dy * w).tolist(), (dx * w).tolist()
        ):
            ev.append((y0 + uy, x0 + ux, CROSS, (a, b)))
            if ux != 0.0 or uy != 0.0:
                ev.append((y0 - uy, x0 - ux, CROSS, (a, b)))
        return self._group(ev)

    def _group(self, ev):
        ev.sort(key=lambda e: (-e[0], e[1]))
        tol = self.tol
        levels = []
        for e in ev:
            if levels and levels[-1][0] - e[0] <= tol:
                levels[-1][1].append(e)
            else:
                levels.append((e[0], [e]))
        out = []
        for y, evs in levels:
            evs.sort(key=lambda e: e[1])
            pts = []
            for e in evs:
                if pts and e[1] - pts[-1][0] <= tol:
                    pts[-1][1].append(e)
                else:
                    pts.append((e[1], [e]))
            out.append((y, [(x, y, es) for x, es in pts]))
        return out

    def side(self, d, x, y):
        dx = x - self.cx[d]
        if abs(dx) <= self.tol:
            return 0
        return -1 if dx < 0 else 1

    def between(self, lo, hi):
        return 0.5 * (lo + hi)

    def arc_x(self, arc, y):
        d, s = arc >> 1, arc & 1
        u = self.r2 - (y - self.cy[d]) ** 2
        h = math.sqrt(u) if u > 0 else 0.0
        return self.cx[d] + h if s else self.cx[d] - h

    def top_vs_arc(self, d, arc):
        return self.cx[d] - self.arc_x(arc, self.cy[d] + self.r)

    def to_float(self, v):
        return float(v)


class _ExactKernel:
    def __init__(self, disks):
        self.cx = [d.center[0] for d in disks]
        self.cy = [d.center[1] for d in disks]
        self.r2 = disks[0].radius_sq

    def events(self):
        cx, cy, r2 = self.cx, self.cy, self.r2
        ev = []
        for d in range(len(cx)):
            x = Surd(cx[d])
            ev.append((Surd(cy[d], 1, r2), x, TOP, (d,)))
            ev.append((Surd(cy[d], -1, r2), x, BOTTOM, (d,)))
        fx = np.array([float(v) for v in cx])
        fy = np.array([float(v) for v in cy])
        rr = float(r2)
        i, j = np.triu_indices(len(cx), 1)
        D2 = (fx[j] - fx[i]) ** 2 + (fy[j] - fy[i]) ** 2
        # float prefilter, exact test below
        close = D2 <= 4 * rr * (1 + 1e-9) + 1e-300
        for a, b in zip(i[close].tolist(), j[close].tolist()):
            dx = cx[b] - cx[a]
            dy = cy[b] - cy[a]
            D2e = dx * dx + dy * dy
            if D2e == 0 or D2e > 4 * r2:
                continue
            w = r2 / D2e - Fraction(1, 4)
            mx = (cx[a] + cx[b]) / 2
            my = (cy[a] + cy[b]) / 2
            ev.append((Surd(my, dx, w), Surd(mx, -dy, w), CROSS, (a, b)))
            if w != 0:
                ev.append((Surd(my, -dx, w), Surd(mx, dy, w), CROSS, (a, b)))
        return self._group(ev)

    def _group(self, ev):
        ev.sort(key=lambda e: (-e[0].approx, e[1].approx))
        scale = max((abs(e[0].approx) + abs(e[1].approx) for e in ev), default=1.0) + 1.0
        near = 1e-9 * scale
        # exact order inside runs of float-indistinguishable y values
        ordered = []
        run = []
        for e in ev:
            if run and abs(run[-1][0].approx - e[0].approx) > near:
                ordered.extend(self._exact_sort(run))
                run = []
            run.append(e)
        ordered.extend(self._exact_sort(run))
        levels = []
        for e in ordered:
            if levels and levels[-1][0].cmp(e[0]) == 0:
                levels[-1][1].append(e)
            else:
                levels.append((e[0], [e]))
        out = []
        for y, evs in levels:
            pts = []
            for e in evs:
                if pts and pts[-1][0].cmp(e[1]) == 0:
                    pts[-1][1].append(e)
                else:
                    pts.append((e[1], [e]))
            out.append((y, [(x, y, es) for x, es in pts]))
        return out

    @staticmethod
    def _exact_sort(run):
        if len(run) < 2:
            return run

        def cmp(e, f):
            c = f[0].cmp(e[0])
            return c if c else e[1].cmp(f[1])

        return sorted(run, key=functools.cmp_to_key(cmp))

    def side(self, d, x, y):
        return x.cmp(self.cx[d])

    def between(self, lo, hi):
        return rational_between(lo, hi)

    def arc_x(self, arc, y):
        d, s = arc >> 1, arc & 1
        u = self.r2 - (y - self.cy[d]) ** 2
        return Surd(self.cx[d], 1 if s else -1, max(u, Fraction(0)))

    def top_vs_arc(self, d, arc):
        e, s = arc >> 1, arc & 1
        # float filter first; the exact path below is rarely needed
        fr = math.sqrt(float(self.r2))
        fd = float(self.cy[d]) - float(self.cy[e])
        fu = -fd * fd - 2 * fd * fr
        fx = float(self.cx[d]) - float(self.cx[e])
        approx = fx - (1 if s else -1) * math.sqrt(max(fu, 0.0))
        if abs(approx) > 1e-9 * (abs(fx) + abs(fd) + fr + 1e-300):
            return 1 if approx > 0 else -1
        X = self.cx[d] - self.cx[e]
        delta = self.cy[d] - self.cy[e]
        u_sign = sign_surd(-delta * delta, -2 * delta, self.r2)
        # sign of X - s*sqrt(u) with u = -delta^2 - 2 delta r
        diff = sign_surd(X * X + delta * delta, 2 * delta, self.r2)  # sign of X^2 - u
        if s:
            if X <= 0:
                return -1 if (X < 0 or u_sign > 0) else 0
            return diff
        if X >= 0:
            return 1 if (X > 0 or u_sign > 0) else 0
        return -diff

    def to_float(self, v):
        return float(v)


# -- the sweep --------------------------------------------------------------


def _fmt(v):
    return f"{float(v):.12g}"


def sweep_decide(disks, n_colors, trace=None, debug=False):
    """Find a point covered by at least one disk of every colour.

    Parameters
    ----------
    disks : sequence of ColoredDisk
        All with the same radius; exact disks (Fraction centers) switch on
        exact arithmetic.
    n_colors : int
        Colours are ``0 .. n_colors - 1``.
    trace : list, optional
        Receives one line per event: ``y x kind disk_ids nonzero_counters``.
    debug : bool
        Check every interval's membership against direct point-in-disk tests
        after each event point.

    Returns
    -------
    numpy.ndarray or None
        A covered point, or ``None`` when no point is covered by every colour.
    """
    disks = list(disks)
    if n_colors <= 0:
        return np.zeros(2)
    if not disks:
        return None
    if len({d.radius_sq if d.exact else d.radius for d in disks}) != 1:
        raise ValueError("all disks must share one radius")
    colors = [sorted(d.colors) for d in disks]
    if any(c >= n_colors or c < 0 for cs in colors for c in cs):
        raise ValueError("disk colour out of range")
    zero = disks[0].radius_sq == 0 if disks[0].exact else disks[0].radius == 0
    if zero:
        return _point_coincidence(disks, n_colors)
    kernel = _ExactKernel(disks) if disks[0].exact else _FloatKernel(disks)
    levels = kernel.events()
    N = len(disks)
    status = []
    pos = [-1] * (2 * N)
    intervals = [SweepInterval([0] * n_colors, 0)]

    for li, (y, points) in enumerate(levels):
        y_next = levels[li + 1][0] if li + 1 < len(levels) else None
        y_mid = kernel.between(y_next, y) if y_next is not None else None
        for x, _, evs in points:
            tops, bottoms, crossing = [], [], set()
            for e in evs:
                if e[2] == TOP:
                    tops.append(e[3][0])
                elif e[2] == BOTTOM:
                    bottoms.append(e[3][0])
                else:
                    crossing.update(e[3])
            through = []  # arcs of active disks passing through this point
            for d in crossing.union(bottoms):
                if pos[2 * d] < 0:
                    continue
                side = 0 if d in bottoms else kernel.side(d, x, y)
                if side <= 0:
                    through.append(2 * d)
                if side >= 0:
                    through.append(2 * d + 1)
            if through:
                idx = [pos[a] for a in through]
                lo, hi = min(idx), max(idx)
            else:
                lo = _locate(kernel, status, tops[0]) if tops else 0
                hi = lo - 1
            left = intervals[lo]

            # closed coverage of the event point itself
            extra = set()
            for a in through:
                if not a & 1:
                    extra.update(colors[a >> 1])
            for d in tops:
                extra.update(colors[d])
            covered = left.nonzero + sum(1 for c in extra if left.counts[c] == 0)

            removed = set(bottoms)
            block = [a for a in status[lo : hi + 1] if (a >> 1) not in removed]
            for d in tops:
                block.extend((2 * d, 2 * d + 1))
            if y_mid is not None and len(block) > 1:
                keys = {a: kernel.arc_x(a, y_mid) for a in block}
                if isinstance(next(iter(keys.values())), Surd):
                    block.sort(key=functools.cmp_to_key(lambda a, b: keys[a].cmp(keys[b])))
                else:
                    block.sort(key=keys.__getitem__)
            new_ivs = [left]
            for a in block:
                iv = new_ivs[-1].copy()
                iv.add(colors[a >> 1], -1 if a & 1 else 1)
                new_ivs.append(iv)
            if debug and hi >= lo and new_ivs[-1].counts != intervals[hi + 1].counts:
                raise AssertionError(f"membership mismatch right of event at ({_fmt(x)}, {_fmt(y)})")
            old_len = hi - lo + 1
            for a in status[lo : hi + 1]:
                pos[a] = -1
            status[lo : hi + 1] = block
            intervals[lo : hi + 2] = new_ivs
            # positions right of the block shift only when its size changed
            stop = lo + len(block) if len(block) == old_len else len(status)
            for p in range(lo, stop):
                pos[status[p]] = p
            if trace is not None:
                counters = ",".join(str(iv.nonzero) for iv in intervals) if status else "-"
                for e in sorted(evs, key=lambda e: (e[2], e[3])):
                    ids = ",".join(str(d) for d in e[3])
                    trace.append(f"{_fmt(y)} {_fmt(x)} {_KIND_NAMES[e[2]]} {ids} {counters}")
            if covered >= n_colors:
                return np.array([kernel.to_float(x), kernel.to_float(y)])
        if debug and y_mid is not None:
            _check_status(kernel, disks, colors, status, intervals, y_mid, n_colors)
    return None


def _locate(kernel, status, d):
    """Insertion index for the top of disk ``d`` among the current arcs."""
    lo, hi = 0, len(status)
    while lo < hi:
        mid = (lo + hi) // 2
        if kernel.top_vs_arc(d, status[mid]) > 0:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _point_coincidence(disks, n_colors):
    # radius zero: a point is covered only where centers coincide
    for d in disks:
        if len(d.colors) >= n_colors:
            return np.array([float(d.center[0]), float(d.center[1])])
    return None


def _check_status(kernel, disks, colors, status, intervals, y_mid, n_colors):
    ym = float(y_mid)
    xs = [float(kernel.arc_x(a, y_mid)) for a in status]
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise AssertionError(f"arcs out of order at y={ym:.12g}")
    probes = []
    for k in range(len(status) + 1):
        if k == 0:
            probes.append(xs[0] - 1.0 if xs else 0.0)
        elif k == len(status):
            probes.append(xs[-1] + 1.0)
        else:
            probes.append(0.5 * (xs[k - 1] + xs[k]))
    cx = np.array([float(d.center[0]) for d in disks])
    cy = np.array([float(d.center[1]) for d in disks])
    r = float(disks[0].radius)
    for k, px in enumerate(probes):
        if 0 < k < len(status) and xs[k] - xs[k - 1] < 1e-9 * (1 + abs(px)):
            continue
        inside = np.flatnonzero((cx - px) ** 2 + (cy - ym) ** 2 < r * r)
        counts = [0] * n_colors
        for d in inside.tolist():
            for c in colors[d]:
                counts[c] += 1
        if counts != intervals[k].counts:
            raise AssertionError(f"interval {k} membership {intervals[k].counts} != {counts} at y={ym:.12g}")
        if intervals[k].nonzero != sum(1 for c in counts if c):
            raise AssertionError(f"interval {k} nonzero counter is stale")


def tcpsm_sweep_decide(P, S, eps, variant="subset", exact=False):
    """Translation of ``P`` and a curve on ``S`` within discrete Fréchet ``eps``.

    Returns a :class:`~cpsm.fixed.MatchResult` with ``translation`` set, or
    ``None``.  The witness curve is rebuilt with the fixed-curve decision
    at the translated curve (with ``1e-9`` slack for the rounding of the
    returned translation).
    """
    variant = check_variant(variant)
    disks = build_disks(P, S, eps, variant, exact=exact)
    Pf, Sf = _inputs(_as_float(P), _as_float(S))
    t = sweep_decide(disks, num_colors(Pf, Sf, variant))
    if t is None:
        return None
    return _witness(Pf, Sf, t, float(eps) if not isinstance(eps, tuple) else math.sqrt(eps[1]), variant)


def _as_float(arr):
    return np.array([[float(v) for v in row] for row in (arr.tolist() if isinstance(arr, np.ndarray) else arr)])


def _witness(P, S, t, eps, variant):
    decide = discrete_subset_decide if variant == "subset" else discrete_allpoints_decide
    res = decide(P + t, S, eps + 1e-9)
    if res is None:
        raise ArithmeticError("sweep translation failed the fixed-curve check")
    res.translation = np.asarray(t, dtype=float)
    return res


# -- optimisation -----------------------------------------------------------


def _centers(P, S, exact):
    disks = build_disks(P, S, 1 if exact else 1.0, "allpoints", exact=exact)
    return [d.center for d in disks]


def critical_radii(P, S, lo=None, hi=None, exact=False):
    """Candidate optimal radii: zero, pair tangencies and triple circumradii.

    Only candidates with value in ``[lo, hi]`` are returned (with a little
    float slack); the list is sorted by value.  In exact mode every
    candidate also carries its exact squared value.
    """
    centers = _centers(P, S, exact)
    C = np.array([[float(c[0]), float(c[1])] for c in centers])
    N = len(C)
    lo = 0.0 if lo is None else lo
    hi = math.inf if hi is None else hi
    slo, shi = lo * (1 - 1e-9) - 1e-12, hi * (1 + 1e-9) + 1e-12
    out = []
    if slo <= 0.0:
        out.append(CriticalRadius(0.0, "zero", (), Fraction(0) if exact else None))
    diff = C[:, None, :] - C[None, :, :]
    D = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    i, j = np.triu_indices(N, 1)
    half = D[i, j] / 2
    keep = (half >= slo) & (half <= shi)
    for a, b, v in zip(i[keep].tolist(), j[keep].tolist(), half[keep].tolist()):
        sq = None
        if exact:
            dx, dy = centers[b][0] - centers[a][0], centers[b][1] - centers[a][1]
            sq = (dx * dx + dy * dy) / 4
            v = sqrt_to_float(sq)
        out.append(CriticalRadius(v, "pair", (a, b), sq))
    # a triple's circumradius is at least half of each of its side lengths
    adj = D <= 2 * shi
    for a in range(N):
        nb = np.flatnonzero(adj[a, a + 1 :]) + a + 1
        if len(nb) < 2:
            continue
        for b, c in itertools.combinations(nb.tolist(), 2):
            if not adj[b, c]:
                continue
            v = _circumradius(C[a], C[b], C[c])
            if v is None or not (slo <= v <= shi):
                continue
            sq = _circumradius_sq_exact(centers[a], centers[b], centers[c]) if exact else None
            if exact:
                if sq is None:
                    continue
                v = sqrt_to_float(sq)
            out.append(CriticalRadius(v, "triple", (a, b, c), sq))
    if exact:
        out.sort(key=lambda c: c.value_sq)
    else:
        out.sort(key=lambda c: c.value)
    return out


def _circumradius(a, b, c):
    u = b - a
    v = c - a
    cross = u[0] * v[1] - u[1] * v[0]
    if cross == 0:
        return None
    uu, vv, ww = u @ u, v @ v, (b - c) @ (b - c)
    return math.sqrt(uu * vv * ww) / (2 * abs(cross))


def _circumradius_sq_exact(a, b, c):
    ux, uy = b[0] - a[0], b[1] - a[1]
    vx, vy = c[0] - a[0], c[1] - a[1]
    cross = ux * vy - uy * vx
    if cross == 0:
        return None
    wx, wy = b[0] - c[0], b[1] - c[1]
    return (ux * ux + uy * uy) * (vx * vx + vy * vy) * (wx * wx + wy * wy) / (4 * cross * cross)


def _start_aligned_bound(P, S, variant):
    """Best fixed-curve discrete optimum over translations ``s - P_0``."""
    T = S - P[0]
    Pt = P[None, :, :] + T[:, None, :]
    dist = np.linalg.norm(Pt[:, :, None, :] - S[None, None, :, :], axis=3)
    val = dist.min(axis=2).max(axis=1)
    if variant == "allpoints":
        val = np.maximum(val, dist.min(axis=1).max(axis=1))
    return float(val.min())


def _search(cands, accepts):
    """Index of the first accepted candidate (monotone predicate) and its value."""
    lo, hi = 0, len(cands) - 1
    found = None
    while lo <= hi:
        mid = (lo + hi) // 2
        t = accepts(cands[mid])
        if t is not None:
            found = (mid, t)
            hi = mid - 1
        else:
            lo = mid + 1
    return found


def sweep_optimize(P, S, variant="subset", exact=False):
    """Smallest ``eps`` for which a translation exists, with that translation.

    The optimum is a critical radius (the arrangement's feasible region
    shrinks to a point exactly at a pair tangency or at the circumcenter of
    three centers), so a binary search with the sweep decision over the
    sorted candidates is exact.  Candidates are first restricted to
    ``[b / 2, b]`` where ``b`` is the start-aligned 2-approximation.

    Returns
    -------
    eps_star : float
    translation : numpy.ndarray
    result : MatchResult
    critical : CriticalRadius
    """
    variant = check_variant(variant)
    Pf, Sf = _inputs(_as_float(P), _as_float(S))
    if Pf.shape[1] != 2:
        raise ValueError("the sweep works in the plane only (D = 2)")
    bound = _start_aligned_bound(Pf, Sf, variant)
    colors = num_colors(Pf, Sf, variant)
    cands = critical_radii(P, S, bound / 2, bound, exact=exact)

    def accepts(c, exact):
        if exact:
            disks = build_disks(P, S, ("sq", c.value_sq), variant, exact=True)
        else:
            e = c.value * (1 + 1e-12) + 1e-15
            disks = build_disks(P, S, e, variant)
        return sweep_decide(disks, colors)

    # binary search in float arithmetic, then certify the boundary exactly
    found = _search(cands, lambda c: accepts(c, exact=False))
    if exact and found is not None:
        j = found[0]
        t = accepts(cands[j], exact=True)
        below = [c for c in cands[:j] if c.value_sq < cands[j].value_sq]
        if t is None or (below and accepts(below[-1], exact=True) is not None):
            found = _search(cands, lambda c: accepts(c, exact=True))
        else:
            found = (j, t)
    if found is None:
        raise ArithmeticError("no critical radius accepted; the candidate bound is inconsistent")
    crit, t = cands[found[0]], found[1]
    res = _witness(Pf, Sf, t, crit.value, variant)
    return crit.value, res.translation, res, crit
