"""
Exact matching under translation with a plane sweep
===================================================

If ``P`` may be translated by ``t``, the discrete Subset question becomes:
is there a point ``t`` that lies in a disk of radius ``eps`` around
``s - P_i`` for every vertex ``i``?  Colour each disk by its vertex and
sweep a horizontal line downwards, counting colours per interval.
"""

from fractions import Fraction
from pathlib import Path

import numpy as np

from cpsm.io import load_instance
from cpsm.sweep import build_disks, critical_radii, num_colors, sweep_decide, sweep_optimize, tcpsm_sweep_decide
from cpsm.svg import render_svg

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

###############################################################################
# The two-segment instance: centers ``(0,0), (1,0), (-2,0), (-1,0)``.  The
# vertex colours first meet where the disks around ``(0,0)`` and
# ``(-1,0)`` touch, at radius one half.

inst = load_instance(HERE / "instances" / "two_segments.json")
P, S = inst.exact_curve, inst.exact_points
for eps in ("0.4", "0.5"):
    trace = []
    t = sweep_decide(build_disks(P, S, eps, exact=True), num_colors(inst.curve, inst.points, "subset"), trace=trace)
    print(f"eps = {eps}: {'t = ' + str(t) if t is not None else 'no translation'}  ({len(trace)} events)")
print("event trace at eps = 0.5 (y x kind disks counters):")
print("\n".join("  " + line for line in trace))

###############################################################################
# The optimum is a critical radius: half the distance of two centers, or
# the circumradius of three.  Exact rational arithmetic certifies it.

eps, t, res, crit = sweep_optimize(P, S, exact=True)
print(f"optimum {eps} at t = {t}, a {crit.kind} of centers {crit.ids}")
print(f"{len(critical_radii(P, S))} critical radii in total")

###############################################################################
# A random instance, both variants.  All-points disks carry two colours,
# one for the vertex and one for the point.

rng = np.random.default_rng(3)
P = np.round(rng.uniform(0, 2, (5, 2)), 2)
S = np.round(rng.uniform(0, 2, (6, 2)), 2)
for variant in ("subset", "allpoints"):
    eps, t, res, crit = sweep_optimize(P, S, variant, exact=True)
    print(f"{variant:<9} eps* = {eps:.6f} ({crit.kind}), t = {np.round(t, 4)}")

res = tcpsm_sweep_decide(P, S, Fraction(1, 2), "subset", exact=True)
if res is not None:
    from cpsm.io import Instance

    picture = render_svg(Instance(P, S), res, eps=0.5)
    (OUT / "sweep_random.svg").write_text(picture)
    print("wrote output/sweep_random.svg")
