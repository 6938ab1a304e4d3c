import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from cpsm.frechet import Coupling, continuous_frechet_decide, continuous_frechet_value, discrete_frechet
from cpsm.oracle import brute_coupling_frechet

coords = st.floats(-3, 3, allow_nan=False).map(lambda v: round(v, 2))
curves = st.integers(1, 6).flatmap(lambda m: arrays(float, (m, 2), elements=coords))


def test_identical_curves_have_zero_distance_and_diagonal_walk():
    P = np.array([[0, 0], [1, 2], [3, 1]], float)
    value, walk = discrete_frechet(P, P)
    assert value == 0.0
    assert walk.steps == ((1, 1), (2, 2), (3, 3))


def test_parallel_unit_segments():
    value, walk = discrete_frechet([[0, 0], [1, 0]], [[0, 1], [1, 1]])
    assert value == 1.0
    assert walk.is_valid(2, 2)


def test_detour_through_apex():
    value, walk = discrete_frechet([[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]])
    assert value == pytest.approx(math.sqrt(2), abs=1e-12)
    assert walk.cost([[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]]) == value


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        discrete_frechet([[0, 0]], [[0, 0, 0]])


def test_coupling_validity():
    assert Coupling(((1, 1), (1, 2), (2, 2))).is_valid(2, 2)
    assert not Coupling(((1, 1), (2, 3))).is_valid(2, 3)
    assert not Coupling(((1, 2), (2, 2))).is_valid(2, 2)


def test_decide_identical_at_zero():
    P = [[0, 0], [1, 1], [2, 0]]
    assert continuous_frechet_decide(P, P, 0.0)


def test_decide_detour():
    P, Q = [[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]]
    assert continuous_frechet_decide(P, Q, 1.0)
    assert not continuous_frechet_decide(P, Q, 0.5)


def test_reversed_segment_needs_full_length():
    assert not continuous_frechet_decide([[0, 0], [1, 0]], [[1, 0], [0, 0]], 0.99)
    assert continuous_frechet_decide([[0, 0], [1, 0]], [[1, 0], [0, 0]], 1.0)


def test_negative_eps_rejected():
    with pytest.raises(ValueError):
        continuous_frechet_decide([[0, 0]], [[1, 1]], -0.1)


def test_value_examples():
    P = [[0, 0], [1, 1], [2, 0]]
    assert continuous_frechet_value(P, P, 1e-6) == pytest.approx(0.0, abs=1e-6)
    assert continuous_frechet_value([[0, 0], [2, 0]], [[0, 0], [1, 1], [2, 0]], 1e-6) == pytest.approx(1.0, abs=1e-6)
    assert continuous_frechet_value([[0, 0], [1, 0]], [[0, 0.3], [1, 0.3]], 1e-6) == pytest.approx(0.3, abs=1e-6)


def test_value_rejects_nonpositive_tol():
    with pytest.raises(ValueError):
        continuous_frechet_value([[0, 0]], [[1, 1]], 0.0)


def test_single_vertex_against_curve():
    # a point against a curve: the farthest vertex decides
    Q = [[0, 0], [3, 4], [1, 0]]
    assert discrete_frechet([[0, 0]], Q)[0] == 5.0
    assert continuous_frechet_value([[0, 0]], Q, 1e-9) == pytest.approx(5.0, abs=1e-8)


def _sampled_lower_bound(P, Q):
    # every vertex of one curve must be within the distance of the other curve
    from cpsm.geometry import dist_point_segment

    P, Q = np.asarray(P, float), np.asarray(Q, float)
    out = max(np.linalg.norm(P[0] - Q[0]), np.linalg.norm(P[-1] - Q[-1]))
    for A, B in ((P, Q), (Q, P)):
        segs = [B[j : j + 2] for j in range(max(1, len(B) - 1))]
        for p in A:
            out = max(out, min(dist_point_segment(p, s if len(s) == 2 else np.vstack([s, s])) for s in segs))
    return out


@given(curves, curves)
def test_discrete_matches_brute_force(P, Q):
    assert discrete_frechet(P, Q)[0] == brute_coupling_frechet(P, Q)


@given(curves, curves)
def test_discrete_symmetric_and_walk_attains_value(P, Q):
    value, walk = discrete_frechet(P, Q)
    assert discrete_frechet(Q, P)[0] == value
    assert walk.is_valid(len(P), len(Q))
    assert walk.cost(P, Q) == value


@given(curves, curves)
def test_continuous_between_lower_bound_and_discrete(P, Q):
    v = continuous_frechet_value(P, Q, 1e-7)
    assert v <= discrete_frechet(P, Q)[0] + 1e-7
    assert v >= _sampled_lower_bound(P, Q) - 1e-7


@given(curves, curves, st.floats(0, 3))
def test_decide_monotone(P, Q, eps):
    if continuous_frechet_decide(P, Q, eps):
        assert continuous_frechet_decide(P, Q, eps * 1.01 + 1e-9)


@given(curves, curves, arrays(float, 2, elements=st.floats(-5, 5)))
def test_invariant_under_joint_translation(P, Q, t):
    assert abs(discrete_frechet(P + t, Q + t)[0] - discrete_frechet(P, Q)[0]) <= 1e-9
    a = continuous_frechet_value(P + t, Q + t, 1e-10)
    b = continuous_frechet_value(P, Q, 1e-10)
    assert abs(a - b) <= 1e-9


@given(curves, curves, arrays(float, 2, elements=st.floats(-1, 1)), st.floats(-2, 2), st.floats(-0.5, 0.5))
def test_translation_is_one_lipschitz(P, Q, u, lam, delta):
    h = lambda s: discrete_frechet(P + s * u, Q)[0]
    assert abs(h(lam + delta) - h(lam)) <= abs(delta) * np.linalg.norm(u) + 1e-9


def test_decide_at_exact_vertex_distance():
    # eps equal to a vertex distance must accept even when the quadratic rounds inward
    P = np.array([[0.85, 1.27], [1.52, 0.14]])
    q = np.array([[0.83, 0.94]])
    eps = float(np.sqrt(((P[1] - q[0]) ** 2).sum()))
    assert continuous_frechet_decide(P, q, eps)
    assert continuous_frechet_decide(q, P, eps)
    assert not continuous_frechet_decide(P, q, eps * (1 - 1e-12))


@given(curves, curves)
def test_decide_accepts_at_the_discrete_value(P, Q):
    assert continuous_frechet_decide(P, Q, discrete_frechet(P, Q)[0])
