import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_spinor(rng, n=None):
    shape = (4,) if n is None else (n, 4)
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)
