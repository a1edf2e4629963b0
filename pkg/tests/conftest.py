import random

import pytest

from tlcat.diagram import enumerate_diagrams


@pytest.fixture
def rng():
    return random.Random(0)


def random_diagram(rng, n, m, dilute=False):
    pool = enumerate_diagrams(n, m, dilute=dilute)
    return rng.choice(pool)
