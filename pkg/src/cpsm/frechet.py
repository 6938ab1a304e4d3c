"""Discrete and continuous Fréchet distance between two polygonal curves.

The discrete distance comes from the classic ``O(nm)`` dynamic program and
is returned with a coupling that attains it.  The continuous distance is
decided on the free-space diagram (cell-by-cell reachability) and its value
is found by bisection on that decision.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import as_curve, pair_distances, segment_disk_interval

__all__ = [
    "Coupling",
    "Reachability",
    "discrete_frechet",
    "continuous_frechet_decide",
    "continuous_frechet_value",
]


@dataclass(frozen=True)
class Coupling:
    """A paired walk through two vertex sequences.

    ``steps`` holds 1-based index pairs ``(a, b)``.  The walk starts at
    ``(1, 1)``, ends at ``(len(P), len(Q))`` and each step advances one or
    both indices by one.
    """

    steps: tuple

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def is_valid(self, len_p, len_q):
        if not self.steps or self.steps[0] != (1, 1) or self.steps[-1] != (len_p, len_q):
            return False
        for (a0, b0), (a1, b1) in zip(self.steps, self.steps[1:]):
            if (a1 - a0, b1 - b0) not in ((1, 0), (0, 1), (1, 1)):
                return False
        return True

    def cost(self, P, Q):
        """Largest vertex-pair distance along the walk."""
        P = np.asarray(P, dtype=float)
        Q = np.asarray(Q, dtype=float)
        dist = pair_distances(P, Q)
        return float(max(dist[a - 1, b - 1] for a, b in self.steps))


def _check_pair(P, Q):
    P = as_curve(P)
    Q = as_curve(Q)
    if P.shape[1] != Q.shape[1]:
        raise ValueError(f"dimension mismatch: {P.shape[1]} vs {Q.shape[1]}")
    return P, Q


def discrete_frechet(P, Q):
    """Discrete Fréchet distance and a coupling attaining it.

    Parameters
    ----------
    P, Q : array_like
        Vertex sequences of shape ``(n, D)`` and ``(m, D)``.

    Returns
    -------
    value : float
        ``min`` over paired walks of the ``max`` vertex-pair distance.
    witness : Coupling
        A walk whose cost equals ``value``.

    Examples
    --------
    >>> discrete_frechet([[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]])[0]
    1.4142135623730951
    """
    P, Q = _check_pair(P, Q)
    n, m = len(P), len(Q)
    dist = pair_distances(P, Q)
    ca = np.empty((n, m))
    ca[0, 0] = dist[0, 0]
    for i in range(1, n):
        ca[i, 0] = max(ca[i - 1, 0], dist[i, 0])
    for j in range(1, m):
        ca[0, j] = max(ca[0, j - 1], dist[0, j])
    d = dist.tolist()
    c = ca.tolist()
    for i in range(1, n):
        ci, cp, di = c[i], c[i - 1], d[i]
        for j in range(1, m):
            best = min(cp[j - 1], cp[j], ci[j - 1])
            ci[j] = best if best > di[j] else di[j]
    # walk back along minimal predecessors, diagonal first on ties
    i, j = n - 1, m - 1
    steps = [(n, m)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            options = ((c[i - 1][j - 1], i - 1, j - 1), (c[i - 1][j], i - 1, j), (c[i][j - 1], i, j - 1))
            _, i, j = min(options, key=lambda o: o[0])
        steps.append((i + 1, j + 1))
    steps.reverse()
    return c[n - 1][m - 1], Coupling(tuple(steps))


@dataclass
class Reachability:
    """Free-space diagram of two curves at one ``eps``.

    ``free_left[i][j]`` is the free interval on the vertical cell edge at
    vertex ``i`` of ``P`` spanning segment ``j`` of ``Q`` (parameter in
    ``[0, 1]``), or ``None``.  ``free_bottom[i][j]`` is the free interval on
    the horizontal edge at vertex ``j`` of ``Q`` spanning segment ``i`` of
    ``P``.  The ``reach_*`` tables hold the parts reachable from ``(0, 0)``
    by a monotone path.
    """

    eps: float
    accepted: bool
    free_left: list = field(repr=False)
    free_bottom: list = field(repr=False)
    reach_left: list = field(repr=False)
    reach_bottom: list = field(repr=False)

    def __bool__(self):
        return self.accepted


def _pad(curve):
    # a single vertex is the same curve as a degenerate segment
    return np.vstack([curve, curve]) if len(curve) == 1 else curve


def continuous_frechet_decide(P, Q, eps):
    """Decide whether the continuous Fréchet distance is at most ``eps``.

    Returns a :class:`Reachability`, which is truthy exactly when the
    answer is yes.
    """
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    P, Q = _check_pair(P, Q)
    P = _pad(P).tolist()
    Q = _pad(Q).tolist()
    n, m = len(P) - 1, len(Q) - 1
    eps = float(eps)
    free_left = [[segment_disk_interval(Q[j], Q[j + 1], P[i], eps) for j in range(m)] for i in range(n + 1)]
    free_bottom = [[segment_disk_interval(P[i], P[i + 1], Q[j], eps) for j in range(m + 1)] for i in range(n)]
    reach_left = [[None] * m for _ in range(n + 1)]
    reach_bottom = [[None] * (m + 1) for _ in range(n)]

    # same test as pair_distances, so corner checks agree with the discrete code
    start_ok = math.sqrt(_sqdist(P[0], Q[0])) <= eps
    end_ok = math.sqrt(_sqdist(P[n], Q[m])) <= eps
    if start_ok:
        ok = True
        for j in range(m):
            f = free_left[0][j]
            if not ok or f is None or f[0] > 0.0:
                break
            reach_left[0][j] = f
            ok = f[1] >= 1.0
        ok = True
        for i in range(n):
            f = free_bottom[i][0]
            if not ok or f is None or f[0] > 0.0:
                break
            reach_bottom[i][0] = f
            ok = f[1] >= 1.0

    for i in range(n):
        for j in range(m):
            lr = reach_left[i][j]
            br = reach_bottom[i][j]
            if lr is None and br is None:
                continue
            right = free_left[i + 1][j]
            if right is not None:
                if br is not None:
                    reach_left[i + 1][j] = right
                elif right[1] >= lr[0]:
                    reach_left[i + 1][j] = (max(right[0], lr[0]), right[1])
            top = free_bottom[i][j + 1]
            if top is not None:
                if lr is not None:
                    reach_bottom[i][j + 1] = top
                elif top[1] >= br[0]:
                    reach_bottom[i][j + 1] = (max(top[0], br[0]), top[1])

    accepted = bool(
        start_ok
        and end_ok
        and (reach_left[n][m - 1] is not None or reach_bottom[n - 1][m] is not None)
    )
    return Reachability(eps, accepted, free_left, free_bottom, reach_left, reach_bottom)


def _sqdist(a, b):
    return sum((x - y) * (x - y) for x, y in zip(a, b))


def continuous_frechet_value(P, Q, tol=1e-9):
    """Continuous Fréchet distance to within ``tol`` by bisection.

    The result is always a value at which the decision accepts, so it never
    underestimates by more than rounding.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    P, Q = _check_pair(P, Q)
    ends = pair_distances(P[[0, -1]], Q[[0, -1]])
    lo = float(max(ends[0, 0], ends[1, 1]))
    hi, _ = discrete_frechet(P, Q)
    if continuous_frechet_decide(P, Q, lo):
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if continuous_frechet_decide(P, Q, mid):
            hi = mid
        else:
            lo = mid
    return hi
