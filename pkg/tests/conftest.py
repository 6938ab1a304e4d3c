import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_instance(rng, n_max=5, k_max=5, n_min=1, k_min=1, scale=2.0, digits=2):
    """Curve and point set with coordinates rounded to ``digits`` decimals.

    Rounding keeps the instances exactly representable as decimals and makes
    coincidences (shared coordinates, repeated distances) reasonably common.
    """
    n = int(rng.integers(n_min, n_max + 1))
    k = int(rng.integers(k_min, k_max + 1))
    P = np.round(rng.uniform(0, scale, (n, 2)), digits)
    S = np.unique(np.round(rng.uniform(0, scale, (k, 2)), digits), axis=0)
    return P, S


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)
