"""Degenerate sweep inputs in exact arithmetic, compared against golden traces.

Set ``CPSM_REGEN_GOLDEN=1`` to rewrite the golden files after an intended
change of the trace format or event order.
"""

import json
import os
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from cpsm.fixed import (
    continuous_subset_decide,
    discrete_allpoints_decide,
    discrete_cpsm_optimize,
    discrete_subset_decide,
    ns_compliant_decide,
)
from cpsm.oracle import candidate_point_scan
from cpsm.sweep import build_disks, num_colors, sweep_decide, sweep_optimize, tcpsm_sweep_decide

GOLDEN = Path(__file__).parent / "golden"
F = Fraction

# name -> (P, S, list of eps)
CASES = {
    # four centers on the unit circle around the origin; at eps = 1 every disk passes through it
    "cocircular": ([[0, 0]], [[1, 0], [0, 1], [-1, 0], [0, -1]], ["0.99", "1", "1.01"]),
    # five cocircular centers of a 3-4-5 circle plus the center itself
    "cocircular_pythagorean": ([[0, 0], [0, 0]], [[3, 4], [-3, 4], [5, 0], [0, -5], [0, 0]], ["2.5", "5"]),
    # s - P_0 == s' - P_1 for several pairs
    "coincident": ([[0, 0], [1, 0], [2, 0]], [[1, 0], [2, 0], [3, 0]], ["0", "0.5", "1"]),
    # collinear curve and points: tops and bottoms share a y coordinate
    "collinear": ([[0, 0], [1, 0], [2, 0]], [[0, 1], [1, 1], [2, 1], [3, 1]], ["0", "0.25", "0.5", "1"]),
    # vertically stacked centers: tops of one disk meet bottoms of another
    "stacked": ([[0, 0], [0, 1]], [[0, 0], [0, 2], [0, 4]], ["0.5", "1", "1.5"]),
    # radius zero: only coincident centers can cover every colour
    "radius_zero": ([[0, 0], [1, 1]], [[5, 5], [6, 6], [9, 0]], ["0"]),
    "radius_zero_miss": ([[0, 0], [1, 2]], [[5, 5], [6, 6]], ["0"]),
    "single_vertex": ([[F(1, 4), F(3, 4)]], [[1, 1], [2, 3], [-1, 0]], ["0", "0.1", "2"]),
    # two disks tangent exactly at the accepted point
    "tangent": ([[0, 0], [2, 0]], [[0, 0], [1, 0]], ["0.5"]),
}

VARIANTS = ("subset", "allpoints")


def _floats(rows):
    return np.array([[float(v) for v in r] for r in rows])


def run_case(name):
    """Exact sweep trace and answers for one degenerate case."""
    P, S, eps_list = CASES[name]
    Pf, Sf = _floats(P), _floats(S)
    out = {}
    for variant in VARIANTS:
        for eps in eps_list:
            trace = []
            disks = build_disks(P, S, eps, variant, exact=True)
            t = sweep_decide(disks, num_colors(Pf, Sf, variant), trace=trace, debug=True)
            out[f"{variant} {eps}"] = {"accepted": t is not None, "point": None if t is None else [float(v) for v in t], "trace": trace}
    return out


def consistency_errors(name):
    """Cross-checks of every decision on the case; returns a list of problems."""
    P, S, eps_list = CASES[name]
    Pf, Sf = _floats(P), _floats(S)
    errs = []
    for variant in VARIANTS:
        answers = []
        for eps in eps_list:
            e = float(eps)
            res = tcpsm_sweep_decide(P, S, eps, variant, exact=True)
            ref = candidate_point_scan(Pf, Sf, e, variant)
            if (res is None) != (ref is None):
                errs.append(f"{variant} eps={eps}: sweep {res is not None} vs candidate points {ref is not None}")
            answers.append(res is not None)
            if res is not None:
                decide = discrete_subset_decide if variant == "subset" else discrete_allpoints_decide
                if decide(Pf + res.translation, Sf, e + 1e-9) is None:
                    errs.append(f"{variant} eps={eps}: witness fails the fixed decision")
            # the fixed-curve decisions terminate and respect their necessary conditions
            for fixed in (discrete_subset_decide, discrete_allpoints_decide, continuous_subset_decide):
                fixed(Pf, Sf, e)
            if len(Pf) > 1:
                ns_compliant_decide(Pf, Sf, e)
        if answers != sorted(answers):
            errs.append(f"{variant}: answers not monotone in eps: {answers}")
        eps_star = sweep_optimize(P, S, variant, exact=True)[0]
        for eps, ok in zip(eps_list, answers):
            if ok != (float(eps) >= eps_star):
                errs.append(f"{variant}: eps={eps} answer {ok} disagrees with optimum {eps_star}")
        if variant == "subset":
            # at translation 0 the fixed optimum bounds the translated one
            if discrete_cpsm_optimize(Pf, Sf, variant)[0] < eps_star - 1e-12:
                errs.append("subset optimum above the zero-translation value")
    return errs


def golden_mismatches(name):
    path = GOLDEN / f"{name}.json"
    got = run_case(name)
    if os.environ.get("CPSM_REGEN_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(json.dumps(got, indent=1, sort_keys=True) + "\n")
    want = json.loads(path.read_text())
    return [key for key in sorted(set(got) | set(want)) if got.get(key) != want.get(key)]


@pytest.mark.parametrize("name", sorted(CASES))
def test_trace_matches_golden(name):
    assert golden_mismatches(name) == []


@pytest.mark.parametrize("name", sorted(CASES))
def test_answers_consistent(name):
    assert consistency_errors(name) == []


def test_known_answers():
    for variant in VARIANTS:
        assert run_case("cocircular")[f"{variant} 1"]["point"] == [0.0, 0.0] or variant == "subset"
    got = run_case("cocircular")
    assert not got["allpoints 0.99"]["accepted"] and got["allpoints 1"]["accepted"]
    got = run_case("radius_zero")
    assert got["subset 0"]["accepted"] and not got["allpoints 0"]["accepted"]
    assert not run_case("radius_zero_miss")["subset 0"]["accepted"]
    assert sweep_optimize(*CASES["tangent"][:2], exact=True)[0] == 0.5


def test_trace_lines_are_well_formed():
    for entry in run_case("collinear").values():
        for line in entry["trace"]:
            y, x, kind, ids, counters = line.split(" ", 4)
            float(y), float(x)
            assert kind in ("top", "cross", "bottom")
