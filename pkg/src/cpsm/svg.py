"""SVG pictures of an instance and, optionally, a match."""

import numpy as np

__all__ = ["render_svg"]


def _fmt(v):
    return f"{float(v):.6g}"


def render_svg(instance, result=None, eps=None, show_disks=False, size=480):
    """Draw the curve, the points and a result curve as an SVG document.

    Parameters
    ----------
    instance : Instance
        Must be planar.
    result : ResultReport or MatchResult, optional
        When it carries a translation the curve is drawn translated; its
        curve is drawn dashed.
    eps : float, optional
        Radius of the disks drawn around the points when ``show_disks``.

    Returns
    -------
    str
        The document.  The picture is flipped so that ``y`` points up.
    """
    P = np.asarray(instance.curve, dtype=float)
    S = np.asarray(instance.points, dtype=float)
    if P.shape[1] != 2:
        raise ValueError(f"render_svg draws planar instances only, got dimension {P.shape[1]}")
    t = getattr(result, "translation", None) if result is not None else None
    if t is not None:
        P = P + np.asarray(t, dtype=float)
    Q = getattr(result, "curve", None) if result is not None else None
    Q = None if Q is None else np.asarray(Q, dtype=float).reshape(-1, 2)
    if eps is None and result is not None:
        eps = getattr(result, "eps_achieved", None) or getattr(result, "epsilon", None)

    geom = [P, S] + ([Q] if Q is not None else [])
    pts = np.vstack(geom)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    if show_disks and eps:
        lo, hi = np.minimum(lo, S.min(axis=0) - eps), np.maximum(hi, S.max(axis=0) + eps)
    span = hi - lo
    span = np.maximum(span, max(0.2 * span.max(), 1e-9))
    lo, hi = lo - 0.05 * span, hi + 0.05 * span
    w, h = hi - lo
    dot = 0.01 * max(w, h)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{_fmt(size * h / w)}" '
        f'viewBox="{_fmt(lo[0])} {_fmt(-hi[1])} {_fmt(w)} {_fmt(h)}">',
        '<g transform="scale(1,-1)" stroke-linecap="round">',
    ]
    if show_disks and eps:
        for x, y in S:
            out.append(f'<circle class="disk" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(eps)}" fill="#4a90d9" fill-opacity="0.12" stroke="none"/>')
    for a, b in zip(P[:-1], P[1:]):
        out.append(
            f'<line class="curve" x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" '
            f'stroke="#222" stroke-width="{_fmt(dot * 0.6)}"/>'
        )
    if Q is not None:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in Q)
        out.append(
            f'<polyline class="match" points="{coords}" fill="none" stroke="#d9534f" '
            f'stroke-width="{_fmt(dot * 0.5)}" stroke-dasharray="{_fmt(dot * 2)} {_fmt(dot)}"/>'
        )
    for x, y in S:
        out.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(dot)}" fill="#1f6fb2"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
