"""Points, curves, translations and the distance primitives every solver uses.

Curves and point sets are plain ``float64`` arrays of shape ``(m, D)``; a
translation is a vector of shape ``(D,)``.  The helpers below validate and
normalise user input into that form.
"""

import math
import warnings

import numpy as np

__all__ = [
    "as_curve",
    "as_points",
    "as_translation",
    "dist_point_segment",
    "pair_distances",
    "apply_translation",
    "segment_disk_interval",
    "diameter",
]

# discriminants this close to zero count as tangent
TANGENT_TOL = 1e-12


def _as_array(data, what):
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{what}: coordinates must be numeric ({exc})") from None
    if arr.ndim != 2:
        raise ValueError(f"{what}: expected a sequence of points, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError(f"{what}: must not be empty")
    if arr.shape[1] < 1:
        raise ValueError(f"{what}: points must have at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what}: coordinates must be finite")
    return arr


def as_curve(vertices):
    """Validate a polygonal curve and return it as an ``(n + 1, D)`` array.

    Consecutive duplicate vertices are kept.
    """
    return _as_array(vertices, "curve")


def as_points(points, dedupe=True):
    """Validate a point set, dropping exact duplicates with a warning.

    The first occurrence of each point is kept, so the order of the
    remaining points is stable.
    """
    arr = _as_array(points, "point set")
    if not dedupe:
        return arr
    seen = set()
    keep = []
    for i, row in enumerate(arr):
        key = tuple(row.tolist())
        if key not in seen:
            seen.add(key)
            keep.append(i)
    if len(keep) < len(arr):
        warnings.warn(
            f"point set: dropped {len(arr) - len(keep)} duplicate point(s)",
            stacklevel=2,
        )
        arr = arr[keep]
    return arr


def as_translation(t, dim=None):
    vec = np.asarray(t, dtype=float).reshape(-1)
    if not np.all(np.isfinite(vec)):
        raise ValueError("translation must be finite")
    if dim is not None and vec.shape[0] != dim:
        raise ValueError(f"translation has dimension {vec.shape[0]}, expected {dim}")
    return vec


def _check_dims(*arrays):
    dims = {np.shape(a)[-1] for a in arrays}
    if len(dims) != 1:
        raise ValueError(f"dimension mismatch: {sorted(dims)}")


def dist_point_segment(p, seg):
    """Euclidean distance from point ``p`` to the closed segment ``seg``.

    ``seg`` is a pair ``(start, end)``; a degenerate segment is a point.

    >>> dist_point_segment((0, 1), ((-1, 0), (1, 0)))
    1.0
    """
    p = np.asarray(p, dtype=float)
    a = np.asarray(seg[0], dtype=float)
    b = np.asarray(seg[1], dtype=float)
    _check_dims(p, a, b)
    d = b - a
    dd = float(d @ d)
    if dd == 0.0:
        return float(np.linalg.norm(p - a))
    u = min(1.0, max(0.0, float((p - a) @ d) / dd))
    return float(np.linalg.norm(p - (a + u * d)))


def apply_translation(curve, t):
    """Shift every vertex of ``curve`` by ``t``."""
    curve = np.asarray(curve, dtype=float)
    t = np.asarray(t, dtype=float)
    _check_dims(curve, t)
    return curve + t


def segment_disk_interval(a, b, c, eps):
    """Parameter range ``[lo, hi]`` of segment ``a -> b`` within ``eps`` of ``c``.

    Works on plain tuples for speed since the free-space code calls it in
    tight loops.  Returns ``None`` when the segment misses the disk.  The
    interval is clipped to ``[0, 1]``.
    """
    ax = 0.0
    dd = 0.0
    cc = 0.0
    cb = 0.0
    for ai, bi, ci in zip(a, b, c):
        di = bi - ai
        ax += (ai - ci) * di
        dd += di * di
        cc += (ai - ci) * (ai - ci)
        cb += (bi - ci) * (bi - ci)
    # endpoint membership uses the same test as pair_distances, so a vertex at
    # distance exactly eps is never lost to rounding in the quadratic below
    a_in = math.sqrt(cc) <= eps
    b_in = math.sqrt(cb) <= eps
    if a_in and b_in:
        return (0.0, 1.0)
    e2 = eps * eps
    if dd == 0.0:
        return (0.0, 1.0) if a_in else None
    # |a + u d - c|^2 = dd u^2 + 2 ax u + cc
    disc = ax * ax - dd * (cc - e2)
    scale = max(ax * ax, dd * (cc + e2), 1e-300)
    if disc < 0.0:
        if disc < -TANGENT_TOL * scale:
            return (0.0, 0.0) if a_in else ((1.0, 1.0) if b_in else None)
        disc = 0.0
    root = math.sqrt(disc)
    lo = 0.0 if a_in else (-ax - root) / dd
    hi = 1.0 if b_in else (-ax + root) / dd
    if hi < -TANGENT_TOL or lo > 1.0 + TANGENT_TOL:
        return None
    lo = min(max(lo, 0.0), 1.0)
    hi = max(min(hi, 1.0), lo)
    return (lo, hi)


def pair_distances(A, B):
    """Matrix of Euclidean distances ``|A_i - B_j|``.

    Every exact comparison of vertex distances in the package goes through
    this one function, so equal inputs give bit-identical values.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    return np.sqrt(np.square(A[:, None, :] - B[None, :, :]).sum(axis=2))


def diameter(*arrays):
    """Diagonal of the bounding box of all given point arrays."""
    pts = np.vstack([np.atleast_2d(np.asarray(a, dtype=float)) for a in arrays])
    span = pts.max(axis=0) - pts.min(axis=0)
    return float(np.linalg.norm(span))
