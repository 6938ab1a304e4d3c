"""
Approximate matching under translation, in any dimension
========================================================

The best curve starts at some point ``s`` of ``S``, so aligning ``P_0``
with ``s`` is at most a factor 2 off.  A lattice of translations around
each aligned start, fine enough for the requested ``alpha``, closes the
gap to ``1 + alpha``.
"""

import time

import numpy as np

from cpsm.approx import start_align_candidates, translate_approx, translate_approx_allpoints_cont, translation_values
from cpsm.sweep import sweep_optimize

rng = np.random.default_rng(11)
P = rng.uniform(0, 2, (5, 2))
S = rng.uniform(0, 2, (5, 2))

###############################################################################
# In the plane the sweep gives the exact optimum to compare against.

exact = sweep_optimize(P, S, "subset")[0]
aligned = translation_values(P, S, start_align_candidates(P, S), "discsubset").min()
print(f"exact optimum        {exact:.5f}")
print(f"best aligned start   {aligned:.5f}  (ratio {aligned / exact:.3f}, at most 2)")
for alpha in (1.0, 0.5, 0.1):
    t0 = time.perf_counter()
    eps = translate_approx(P, S, alpha, "discsubset")[2]
    print(f"alpha = {alpha:<4} eps_hat = {eps:.5f}  ratio {eps / exact:.4f}  {time.perf_counter() - t0:.2f} s")

###############################################################################
# The same code runs in three dimensions, and for the continuous Subset
# variant (a bisection per lattice point, pruned by one decision each).

P3 = rng.uniform(0, 1, (4, 3))
S3 = P3 + rng.normal(scale=0.05, size=P3.shape) + [2.0, -1.0, 0.5]
t, res, eps = translate_approx(P3, S3, 0.5, "discsubset")
print(f"3-D subset: eps_hat = {eps:.4f} at t = {np.round(t, 3)}")
t, res, eps = translate_approx(P, S, 0.5, "contsubset", 1e-7)
print(f"continuous subset: eps_hat = {eps:.5f}")

###############################################################################
# Continuous All-points combines the lattice with the nearest-segment
# 3-approximation.

t, res, eps = translate_approx_allpoints_cont(P[:3], S[:3], 0.5, 1e-7)
print(f"continuous all-points: eps_hat = {eps:.5f}, curve of {len(res.curve)} vertices")
