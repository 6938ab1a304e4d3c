import math

import numpy as np
import pytest

from cpsm.fixed import (
    allpoints_3approx,
    closest_segments,
    continuous_subset_decide,
    continuous_subset_optimize,
    discrete_allpoints_decide,
    discrete_cpsm_optimize,
    discrete_subset_decide,
    ns_compliant_decide,
)
from cpsm.frechet import continuous_frechet_decide, discrete_frechet
from cpsm.geometry import dist_point_segment, segment_disk_interval
from cpsm.oracle import brute_curve_exists, oracle_optimum

from conftest import random_instance

SEG = [[0, 0], [1, 0]]
APEX = [[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]]
LINE3 = [[0, 0], [1, 0], [2, 0]]
LIFTED = [[0, 0.2], [2, 0.2]]


def _discrete_ok(P, res):
    return discrete_frechet(P, res.curve)[0] <= res.epsilon + 1e-9


def _continuous_ok(P, res):
    return bool(continuous_frechet_decide(P, res.curve, res.epsilon + 1e-9))


def _in_S(res, S):
    S = np.asarray(S, float)
    return all(any(np.array_equal(q, s) for s in S) for q in res.curve)


# discrete subset


def test_discrete_subset_vertices_in_S():
    P = [[0, 0], [1, 2], [3, 1]]
    res = discrete_subset_decide(P, P + [[5, 5]], 0.0)
    assert np.array_equal(res.curve, P)


def test_discrete_subset_single_point():
    res = discrete_subset_decide(SEG, [[0, 0]], 1.0)
    assert np.array_equal(res.curve, [[0, 0], [0, 0]])
    assert _discrete_ok(SEG, res)
    assert discrete_subset_decide(SEG, [[0, 0]], 0.5) is None


def test_discrete_negative_eps():
    with pytest.raises(ValueError):
        discrete_subset_decide(SEG, [[0, 0]], -1)


# discrete all-points

AP_S = [[0, 0], [1, 0], [0.5, 2]]


def test_discrete_allpoints_identity():
    P = [[0, 0], [1, 2], [3, 1]]
    res = discrete_allpoints_decide(P, P, 0.0)
    assert np.array_equal(res.curve, P)


def test_discrete_allpoints_far_point():
    assert discrete_allpoints_decide(SEG, AP_S, 1.0) is None
    res = discrete_allpoints_decide(SEG, AP_S, 2.1)
    assert res is not None and _discrete_ok(SEG, res)
    assert {tuple(q) for q in res.curve} == {tuple(s) for s in AP_S}


# discrete optimization


def test_discrete_optimize_examples():
    P = [[0, 0], [1, 2], [3, 1]]
    assert discrete_cpsm_optimize(P, P, "subset")[0] == 0.0
    assert discrete_cpsm_optimize(SEG, [[0, 0]], "subset")[0] == 1.0
    eps, res = discrete_cpsm_optimize(SEG, AP_S, "allpoints")
    assert eps == pytest.approx(math.sqrt(4.25), abs=1e-15)
    assert _discrete_ok(SEG, res)


def test_discrete_optimum_is_a_vertex_point_distance(rng):
    for _ in range(30):
        P, S = random_instance(rng)
        for variant in ("subset", "allpoints"):
            eps, res = discrete_cpsm_optimize(P, S, variant)
            d = np.linalg.norm(P[:, None] - S[None], axis=2)
            assert np.isclose(d, eps, rtol=0, atol=1e-12).any()
            decide = discrete_subset_decide if variant == "subset" else discrete_allpoints_decide
            smaller = d[d < eps - 1e-12]
            if smaller.size:
                assert decide(P, S, smaller.max()) is None


# continuous subset


def test_continuous_subset_collinear_zero():
    res = continuous_subset_decide(LINE3, [[0, 0], [2, 0]], 0.0)
    assert res is not None
    assert _continuous_ok(LINE3, res)
    assert len(res.curve) == 2


def test_continuous_subset_parallel_offset():
    res = continuous_subset_decide(LINE3, LIFTED, 0.2)
    assert res is not None and _continuous_ok(LINE3, res)
    assert continuous_subset_decide(LINE3, LIFTED, 0.1) is None


def test_continuous_subset_apex_instance():
    # Q = ((0,0),(2,0)) equals P, so the optimum is 0 and both queries accept
    P, S = [[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]]
    for eps in (0.9, 1.0):
        res = continuous_subset_decide(P, S, eps)
        assert res is not None and _continuous_ok(P, res)
        assert brute_curve_exists(P, S, eps, "contsubset") is not None


def test_continuous_subset_optimize_examples():
    P = [[0, 0], [1, 2], [3, 1]]
    assert continuous_subset_optimize(P, P, 1e-6)[0] == pytest.approx(0.0, abs=1e-6)
    eps, res = continuous_subset_optimize(LINE3, LIFTED, 1e-6)
    assert eps == pytest.approx(0.2, abs=1e-6)
    assert _continuous_ok(LINE3, res)


def test_continuous_subset_optimize_matches_oracle(rng):
    for _ in range(15):
        P, S = random_instance(rng, n_max=3, k_max=3)
        eps, _ = continuous_subset_optimize(P, S, 1e-6)
        ref = oracle_optimum(P, S, "contsubset", tol=1e-7)
        assert abs(eps - ref) <= 2e-6


# closest segments


def test_closest_segment_interior_and_tie():
    P = [[0, 0], [1, 0], [2, 0], [3, 0], [3, 3]]
    idx = closest_segments(P, [[2.5, 0.1], [3.0, -0.5]])
    assert idx[0] == 2
    # (3, -0.5) is nearest to the vertex shared by segments 2 and 3
    assert idx[1] == 2
    idx = closest_segments([[0, 0], [1, 0], [2, 0]], [[1, 1]])
    assert idx[0] == 0


def test_closest_segments_brute_force(rng):
    for _ in range(50):
        P, S = random_instance(rng, n_min=2, n_max=6, k_max=8)
        cs = closest_segments(P, S)
        for s in range(len(S)):
            d = [dist_point_segment(S[s], P[j : j + 2]) for j in range(len(P) - 1)]
            assert cs.distance[s] == pytest.approx(min(d), abs=1e-12)
            assert d[cs[s]] <= min(d) + 1e-12


# NS-compliant


def test_ns_identity():
    P = [[0, 0], [1, 1], [2, 0]]
    res = ns_compliant_decide(P, P, 0.0)
    assert np.array_equal(res.curve, P)


def test_ns_bump():
    P, S = [[0, 0], [2, 0]], [[0, 0], [1, 0.3], [2, 0]]
    res = ns_compliant_decide(P, S, 0.3)
    assert np.allclose(res.curve, S)
    assert _continuous_ok(P, res)


def test_ns_rejects_point_too_far_from_its_segment(rng):
    for _ in range(30):
        P, S = random_instance(rng, n_min=2)
        cs = closest_segments(P, S)
        eps = 0.99 * cs.distance.max()
        assert ns_compliant_decide(P, S, eps) is None


def test_3approx_examples():
    P = [[0, 0], [1, 1], [2, 0]]
    eps, res = allpoints_3approx(P, P, 1e-9)
    assert eps == pytest.approx(0.0, abs=1e-9)
    eps, res = allpoints_3approx([[0, 0], [2, 0]], [[0, 0], [1, 0.3], [2, 0]], 1e-7)
    assert eps == pytest.approx(0.3, abs=1e-7)
    ref = oracle_optimum([[0, 0], [2, 0]], [[0, 0], [1, 0.3], [2, 0]], "contall", tol=1e-8)
    assert ref == pytest.approx(0.3, abs=1e-7)


# oracle agreement and re-verification

DECIDERS = {
    "discsubset": (discrete_subset_decide, _discrete_ok),
    "discall": (discrete_allpoints_decide, _discrete_ok),
    "contsubset": (continuous_subset_decide, _continuous_ok),
    "contallns": (ns_compliant_decide, _continuous_ok),
}


@pytest.mark.parametrize("variant", sorted(DECIDERS))
def test_decisions_agree_with_oracle(rng, variant):
    decide, verify = DECIDERS[variant]
    for _ in range(40):
        P, S = random_instance(rng, n_max=3, k_max=3, n_min=2 if variant == "contallns" else 1)
        for eps in rng.uniform(0.05, 1.5, 2):
            res = decide(P, S, eps)
            ref = brute_curve_exists(P, S, eps, variant)
            assert (res is None) == (ref is None)
            if res is not None:
                assert verify(P, res) and _in_S(res, S)
                assert res.epsilon <= eps


@pytest.mark.parametrize("variant", sorted(DECIDERS))
def test_decisions_monotone(rng, variant):
    decide, _ = DECIDERS[variant]
    for _ in range(40):
        P, S = random_instance(rng, n_min=2)
        eps = float(rng.uniform(0, 1.5))
        if decide(P, S, eps) is not None:
            assert decide(P, S, eps * 1.05 + 1e-9) is not None


def test_continuous_vertices_have_feasible_segments(rng):
    for _ in range(40):
        P, S = random_instance(rng, n_min=2)
        for decide in (continuous_subset_decide, ns_compliant_decide):
            eps = float(rng.uniform(0.3, 1.5))
            res = decide(P, S, eps)
            if res is None:
                continue
            for q in res.curve:
                ivs = [segment_disk_interval(P[j], P[j + 1], q, res.epsilon + 1e-12) for j in range(len(P) - 1)]
                assert any(iv is not None for iv in ivs)


def test_3approx_sandwich_small(rng):
    for _ in range(10):
        P, S = random_instance(rng, n_min=2, n_max=3, k_max=3)
        eps, res = allpoints_3approx(P, S, 1e-7)
        ref = oracle_optimum(P, S, "contall", tol=1e-8)
        assert ref - 1e-6 <= eps <= 3 * ref + 1e-6
        assert _continuous_ok(P, res)


def test_exact_distance_eps_agrees_with_oracle(rng):
    # eps hits a vertex-point distance exactly: the tangent case for every solver
    for _ in range(40):
        P, S = random_instance(rng, n_min=2, n_max=4, k_max=3)
        d = np.unique(np.linalg.norm(P[:, None] - S[None], axis=2))
        eps = float(d[rng.integers(len(d))])
        for variant, (decide, _) in DECIDERS.items():
            assert (decide(P, S, eps) is None) == (brute_curve_exists(P, S, eps, variant) is None)
