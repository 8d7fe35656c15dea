import random

import pytest

from braidcensus.closedform import totient_sieve


@pytest.fixture(scope="session")
def phi_2000():
    return totient_sieve(2000)


@pytest.fixture()
def rng():
    return random.Random(987123)


def fuzz_coordinates(rng, trials, nmax=6, kmax=10):
    """Yield `trials` random valid tuples, biased toward small shapes."""
    from braidcensus.coords import random_coordinates

    for _ in range(trials):
        n = rng.randint(1, nmax)
        k = rng.randint(0, kmax)
        yield random_coordinates(rng, n, k)
