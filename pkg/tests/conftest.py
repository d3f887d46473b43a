import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_future_timelike(rng, n=4, margin=0.1):
    v = rng.standard_normal(n)
    v[0] = abs(v[0]) + np.linalg.norm(v[1:]) + margin
    return v
