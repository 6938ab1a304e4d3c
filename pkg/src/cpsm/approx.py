"""Approximate matching under translation, in any dimension.

If ``Q`` is a best curve for the best translation ``t``, then ``Q`` starts
at a point ``s`` of ``S`` with ``|P_0 + t - s|`` at most the optimum, so
the translation ``s - P_0`` loses at most a factor 2.  Searching a lattice
around each such start-aligned translation then recovers a ``1 + alpha``
factor, since the per-translation optimum is 1-Lipschitz in ``t``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .fixed import (
    _bisect,
    _default_tol,
    _inputs,
    allpoints_3approx,
    closest_segments,
    continuous_subset_decide,
    continuous_subset_optimize,
    discrete_allpoints_decide,
    discrete_subset_decide,
    ns_compliant_decide,
)
from .geometry import as_points

__all__ = [
    "LatticeSpec",
    "start_align_candidates",
    "translation_values",
    "translate_approx",
    "translate_approx_allpoints_cont",
]

APPROX_VARIANTS = ("contsubset", "discsubset", "discallpoints")


@dataclass(frozen=True)
class LatticeSpec:
    """Axis-aligned cube of translations ``center + spacing * z``.

    The cube spans ``[-half_width, half_width]`` around ``center`` on every
    axis.
    """

    center: np.ndarray
    half_width: float
    spacing: float
    dimension: int

    def __post_init__(self):
        if not self.spacing > 0:
            raise ValueError("spacing must be positive")
        if self.half_width < 0:
            raise ValueError("half_width must be nonnegative")

    @classmethod
    def around(cls, center, half_width, alpha, shrink=1.0):
        """Lattice with spacing ``half_width / 2**L <= alpha * half_width / (shrink * sqrt(d))``.

        Power-of-two spacings make the lattice for a smaller ``alpha`` a
        refinement of the one for a larger ``alpha``.
        """
        center = np.asarray(center, dtype=float)
        d = len(center)
        levels = max(0, math.ceil(math.log2(shrink * math.sqrt(d) / alpha)))
        return cls(center, float(half_width), float(half_width) / 2**levels, d)

    @property
    def count_per_axis(self):
        return math.ceil(round(2 * self.half_width / self.spacing, 9)) + 1

    def points(self):
        m = self.count_per_axis
        axis = -self.half_width + self.spacing * np.arange(m)
        grid = np.meshgrid(*([axis] * self.dimension), indexing="ij")
        return self.center + np.stack(grid, axis=-1).reshape(-1, self.dimension)


def start_align_candidates(P, S):
    """Translations ``s - P_0`` that put the start of ``P`` on a point of ``S``."""
    P, S = _inputs(P, S)
    return S - P[0]


def _approx_variant(variant):
    v = str(variant).lower().replace("-", "").replace("_", "")
    v = {"discall": "discallpoints", "subset": "discsubset", "allpoints": "discallpoints"}.get(v, v)
    if v not in APPROX_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {APPROX_VARIANTS}")
    return v


def translation_values(P, S, T, variant="discsubset"):
    """Discrete fixed-curve optimum of ``P + t`` for every row ``t`` of ``T``.

    Subset: the largest distance from a vertex to its nearest point.
    All-points: also the largest distance from a point to its nearest vertex.
    """
    variant = _approx_variant(variant)
    if variant == "contsubset":
        raise ValueError("closed form exists for the discrete variants only")
    T = np.atleast_2d(T)
    out = np.empty(len(T))
    step = max(1, 2_000_000 // max(1, len(P) * len(S)))
    for a in range(0, len(T), step):
        d = np.linalg.norm((P[None, :, None, :] + T[a : a + step, None, None, :]) - S[None, None], axis=3)
        v = d.min(axis=2).max(axis=1)
        if variant == "discallpoints":
            v = np.maximum(v, d.min(axis=1).max(axis=1))
        out[a : a + step] = v
    return out


def _end_prune(P, S, t, best):
    # the optimal start-aligned candidate also puts P's end within 2 * opt of S
    return np.linalg.norm(S - (P[-1] + t), axis=1).min() > 2 * best


def _discrete_search(P, S, alpha, variant):
    T0 = start_align_candidates(P, S)
    vals = translation_values(P, S, T0, variant)
    order = np.argsort(vals, kind="stable")
    best_v, best_t = float(vals[order[0]]), T0[order[0]]
    if best_v == 0.0:
        return best_t, best_v
    for c in order.tolist():
        t0, delta = T0[c], float(vals[c])
        if _end_prune(P, S, t0, best_v):
            continue
        T = LatticeSpec.around(t0, delta, alpha).points()
        v = translation_values(P, S, T, variant)
        j = int(v.argmin())
        if v[j] < best_v:
            best_v, best_t = float(v[j]), T[j]
    return best_t, best_v


def _bnb_search(P, S, alpha, solve, decide, tol, shrink):
    """Lattice search with a bisecting solver, pruned by one decision per point."""
    T0 = start_align_candidates(P, S)
    deltas = [solve(P + t, None)[0] for t in T0]
    order = np.argsort(deltas, kind="stable")
    best_v, best_t = deltas[order[0]], T0[order[0]]
    if best_v <= tol:
        return best_t, best_v
    for c in order.tolist():
        t0, delta = T0[c], deltas[c]
        if _end_prune(P, S, t0, best_v):
            continue
        for t in LatticeSpec.around(t0, delta, alpha, shrink).points():
            # only bisect where the current best can be beaten by more than tol
            if decide(P + t, best_v - tol) is None:
                continue
            v = solve(P + t, best_v)[0]
            if v < best_v:
                best_v, best_t = v, t
    return best_t, best_v


def translate_approx(P, S, alpha, variant="discsubset", tol=None):
    """``(1 + alpha)``-approximate optimum over translations of ``P``.

    Parameters
    ----------
    P, S : array_like
        Curve and point set in any dimension ``d``.
    alpha : float
        Approximation parameter, ``> 0``.
    variant : {"discsubset", "discallpoints", "contsubset"}
    tol : float, optional
        Bisection tolerance for the continuous variant.

    Returns
    -------
    translation : numpy.ndarray
    result : MatchResult
        Witness curve for ``P + translation``.
    eps_hat : float
        At most ``(1 + alpha)`` times the optimum (plus ``tol``).
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    variant = _approx_variant(variant)
    P, S = _inputs(P, S)
    if variant == "contsubset":
        tol = _default_tol(P, S) if tol is None else tol
        if tol <= 0:
            raise ValueError("tol must be positive")

        def solve(Pt, upper):
            if upper is None:
                return continuous_subset_optimize(Pt, S, tol)
            lo = max(float(np.linalg.norm(S - Pt[e], axis=1).min()) for e in (0, -1))
            return _bisect(lambda e: continuous_subset_decide(Pt, S, e), min(lo, upper), upper, tol)

        t, eps_hat = _bnb_search(P, S, alpha, solve, lambda Pt, e: continuous_subset_decide(Pt, S, max(e, 0.0)), tol, 1.0)
        res = continuous_subset_decide(P + t, S, eps_hat)
    else:
        t, eps_hat = _discrete_search(P, S, alpha, variant)
        decide = discrete_subset_decide if variant == "discsubset" else discrete_allpoints_decide
        res = decide(P + t, S, eps_hat)
    res.translation = np.asarray(t, dtype=float)
    return res.translation, res, float(eps_hat)


def translate_approx_allpoints_cont(P, S, alpha, tol=None):
    """``(3 + alpha)``-approximation for the continuous All-points variant.

    The per-translation solver is the nearest-segment 3-approximation, so
    the lattice half-width can be ``6`` times the optimum and the solver
    triples any rounding error; refining the spacing by a further factor of
    9 keeps the extra error below ``alpha`` times the optimum.
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    P, S = _inputs(P, S)
    S = as_points(S)
    tol = _default_tol(P, S) if tol is None else tol
    if tol <= 0:
        raise ValueError("tol must be positive")

    def solve(Pt, upper):
        if upper is None:
            return allpoints_3approx(Pt, S, tol)
        lo = float(closest_segments(Pt, S).distance.max())
        return _bisect(lambda e: ns_compliant_decide(Pt, S, e), min(lo, upper), upper, tol)

    t, eps_hat = _bnb_search(P, S, alpha, solve, lambda Pt, e: ns_compliant_decide(Pt, S, max(e, 0.0)), tol, 9.0)
    res = ns_compliant_decide(P + t, S, eps_hat)
    res.translation = np.asarray(t, dtype=float)
    return res.translation, res, float(eps_hat)
