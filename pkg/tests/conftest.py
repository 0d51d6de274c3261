import random

import pytest

from config import config
from realization import default_family, random_family


@pytest.fixture
def rng():
    return random.Random(config.SEED)


@pytest.fixture(scope="session")
def default8():
    return default_family(8)


@pytest.fixture(scope="session")
def random_families():
    rng = random.Random(config.SEED + 1)
    return [random_family(8, rng) for _ in range(10)]
