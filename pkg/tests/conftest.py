import random

import pytest

from tensor_orbit.perm import Permutation, perm_table


@pytest.fixture(scope="session")
def s4():
    return [Permutation.from_array0(r) for r in perm_table(4)]


@pytest.fixture
def rng():
    return random.Random(20240611)
