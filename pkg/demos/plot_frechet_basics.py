"""
Discrete and continuous Fréchet distance
========================================

Two ways to walk a pair of curves in lockstep.  The discrete distance only
looks at vertex pairs; the continuous one lets both walkers stop anywhere
along a segment, so it is never larger.
"""

import numpy as np

from cpsm.frechet import continuous_frechet_decide, continuous_frechet_value, discrete_frechet

###############################################################################
# A straight segment against a detour through an apex.  The discrete walk
# has to pair the apex with an end point of the segment.

P = np.array([[0.0, 0.0], [2.0, 0.0]])
Q = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 0.0]])

value, walk = discrete_frechet(P, Q)
print(f"discrete distance   {value:.6f}")
print(f"coupling (1-based)  {walk.steps}")

###############################################################################
# Continuously, the walker on P can wait at the midpoint while the other one
# climbs the apex, so the distance drops to 1.

print(f"continuous distance {continuous_frechet_value(P, Q, 1e-9):.6f}")
for eps in (0.5, 0.99, 1.0):
    print(f"  decide at {eps:<4}  -> {bool(continuous_frechet_decide(P, Q, eps))}")

###############################################################################
# Direction matters: a segment and its reverse are a full length apart,
# although their images coincide.

seg = np.array([[0.0, 0.0], [1.0, 0.0]])
print(f"reversed segment    {continuous_frechet_value(seg, seg[::-1], 1e-9):.6f}")

###############################################################################
# Moving one curve by ``t`` changes either distance by at most ``|t|``.

rng = np.random.default_rng(0)
A, B = rng.uniform(0, 1, (5, 2)), rng.uniform(0, 1, (4, 2))
base = discrete_frechet(A, B)[0]
for scale in (0.01, 0.1, 0.5):
    t = scale * np.array([0.6, 0.8])
    moved = discrete_frechet(A + t, B)[0]
    print(f"|t| = {scale:<4}  change {abs(moved - base):.4f}")
