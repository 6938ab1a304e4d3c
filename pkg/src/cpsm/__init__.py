"""Matching a polygonal curve to a point set under the Fréchet distance.

The curve may be held fixed or translated freely; see the submodules:

* :mod:`cpsm.frechet`: discrete and continuous Fréchet distance
* :mod:`cpsm.fixed`: fixed-curve matching
* :mod:`cpsm.sweep`: exact plane sweep over translations (plane only)
* :mod:`cpsm.approx`: lattice approximations under translation (any dimension)
* :mod:`cpsm.oracle`: brute-force references
* :mod:`cpsm.io`, :mod:`cpsm.svg`, :mod:`cpsm.bench`: files, pictures, timings
"""

from .approx import LatticeSpec, start_align_candidates, translate_approx, translate_approx_allpoints_cont
from .fixed import (
    ClosestSegmentIndex,
    MatchResult,
    allpoints_3approx,
    closest_segments,
    continuous_subset_decide,
    continuous_subset_optimize,
    discrete_allpoints_decide,
    discrete_cpsm_optimize,
    discrete_subset_decide,
    ns_compliant_decide,
)
from .frechet import Coupling, continuous_frechet_decide, continuous_frechet_value, discrete_frechet
from .geometry import dist_point_segment, segment_disk_interval
from .io import Instance, ResultReport, parse_instance
from .sweep import ColoredDisk, CriticalRadius, build_disks, sweep_decide, sweep_optimize, tcpsm_sweep_decide
from .svg import render_svg

__version__ = "0.1.0"
