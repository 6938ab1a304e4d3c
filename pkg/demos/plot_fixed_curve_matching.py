"""
Matching a fixed curve to a point set
=====================================

Given a curve ``P`` and points ``S``, find a curve through points of ``S``
that stays within ``eps`` of ``P``.  Subset variants may skip points;
All-points variants must visit every point.  Points may be revisited.
"""

from pathlib import Path

import numpy as np

from cpsm.fixed import (
    allpoints_3approx,
    closest_segments,
    continuous_subset_optimize,
    discrete_cpsm_optimize,
    ns_compliant_decide,
)
from cpsm.io import ResultReport, load_instance
from cpsm.oracle import oracle_optimum
from cpsm.svg import render_svg

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

inst = load_instance(HERE / "instances" / "zigzag.csv")
P, S = inst.curve, inst.points
print(f"curve with {inst.n} segments, {inst.k} points")

###############################################################################
# Discrete variants: the optimum is always one of the vertex-point
# distances, so it is found exactly.

for variant in ("subset", "allpoints"):
    eps, res = discrete_cpsm_optimize(P, S, variant)
    print(f"discrete {variant:<9} eps* = {eps:.4f}  curve uses points {list(res.indices)}")

###############################################################################
# Continuous Subset: the matched curve may cut corners between vertices,
# which usually lowers the optimum.

eps, res = continuous_subset_optimize(P, S, 1e-9)
print(f"continuous subset  eps* = {eps:.4f}  curve uses points {list(res.indices)}")

###############################################################################
# Continuous All-points is approximated: every point is visited while the
# walker on P is on the segment nearest that point.

cs = closest_segments(P, S)
print("nearest segment per point:", cs.index.tolist())
eps_hat, res = allpoints_3approx(P, S, 1e-9)
exact = oracle_optimum(P, S, "contall", tol=1e-7)
print(f"3-approximation    eps  = {eps_hat:.4f}")
print(f"brute-force optimum     = {exact:.4f}  (the guarantee allows up to 3x)")
assert ns_compliant_decide(P, S, eps_hat) is not None

path = OUT / "fixed_allpoints.svg"
rep = ResultReport.from_match("cpsm opt", "allpoints", res, eps_optimal=eps_hat)
path.write_text(render_svg(inst, rep, show_disks=True))
print(f"wrote {path.relative_to(HERE)}")
