import numpy as np
import pytest

from mixedsasaki import kernels
from mixedsasaki.hypersurface import induced_mixed_structure, pseudo_sphere, sample_points
from mixedsasaki.suite import SuiteConfig, run_suite


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    """Run the test once per available exterior-algebra backend."""
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)


@pytest.fixture(scope="session", params=[0, 1], ids=["n0", "n1"])
def sphere(request):
    H = pseudo_sphere(request.param)
    return H, induced_mixed_structure(H), sample_points(H, 42, 6)


@pytest.fixture(scope="session")
def reports():
    """The seed-42 acceptance runs for n = 0 and n = 1, computed once."""
    return {n: run_suite(SuiteConfig(n=n, seed=42)) for n in (0, 1)}


def rng(seed=0):
    return np.random.default_rng(seed)
