import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cpsm.geometry import (
    apply_translation,
    as_curve,
    as_points,
    dist_point_segment,
    segment_disk_interval,
)

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)


def test_point_to_segment_examples():
    assert dist_point_segment((0, 1), ((-1, 0), (1, 0))) == 1.0
    assert dist_point_segment((3, 4), ((0, 0), (0, 0))) == 5.0
    assert dist_point_segment((2, 0), ((-1, 0), (1, 0))) == 1.0


@given(point, point, point)
def test_point_to_segment_matches_dense_sampling(p, a, b):
    d = dist_point_segment(p, (a, b))
    u = np.linspace(0, 1, 2001)[:, None]
    pts = np.asarray(a) + u * (np.asarray(b) - np.asarray(a))
    sampled = np.linalg.norm(pts - np.asarray(p), axis=1).min()
    seg_len = math.dist(a, b)
    assert d <= sampled + 1e-9
    assert sampled <= d + seg_len / 2000 + 1e-9


def test_dimension_mismatch_is_rejected():
    with pytest.raises(ValueError, match="dimension"):
        dist_point_segment((0, 0, 0), ((0, 0), (1, 0)))
    with pytest.raises(ValueError, match="dimension"):
        apply_translation([[0, 0]], [1, 2, 3])


def test_translation_shifts_every_vertex():
    out = apply_translation([[0, 0], [1, 2]], [0.5, -1])
    assert out.tolist() == [[0.5, -1.0], [1.5, 1.0]]


def test_input_validation():
    with pytest.raises(ValueError, match="empty"):
        as_curve(np.zeros((0, 2)))
    with pytest.raises(ValueError, match="finite"):
        as_curve([[0, float("nan")]])
    with pytest.raises(ValueError, match="numeric"):
        as_curve([["a", 1]])


def test_duplicate_points_are_dropped_with_warning():
    with pytest.warns(UserWarning, match="duplicate"):
        S = as_points([[0, 0], [1, 1], [0, 0]])
    assert S.tolist() == [[0.0, 0.0], [1.0, 1.0]]


def test_segment_disk_interval():
    assert segment_disk_interval((0, 0), (2, 0), (1, 0), 0.5) == (0.25, 0.75)
    assert segment_disk_interval((0, 0), (2, 0), (1, 1), 0.5) is None
    lo, hi = segment_disk_interval((0, 0), (2, 0), (1, 1), 1.0)
    assert lo == pytest.approx(0.5) and hi == pytest.approx(0.5)
    assert segment_disk_interval((0, 0), (0, 0), (0, 1), 1.0) == (0.0, 1.0)
    assert segment_disk_interval((0, 0), (1, 0), (5, 0), 1.0) is None


@given(point, point, point, st.floats(0, 5))
def test_segment_disk_interval_endpoints_are_on_or_in_the_disk(a, b, c, eps):
    f = segment_disk_interval(a, b, c, eps)
    if f is None:
        assert dist_point_segment(c, (a, b)) >= eps - 1e-6
        return
    for u in f:
        p = np.asarray(a) + u * (np.asarray(b) - np.asarray(a))
        assert np.linalg.norm(p - np.asarray(c)) <= eps + 1e-6 * (1 + eps + math.dist(a, b))
