import random

import pytest

from weylcalc.verify import random_polynomial


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture
def random_symbol(rng):
    def make(n=1, degree=3, terms=4):
        return random_polynomial(rng, n, degree=degree, terms=terms)
    return make
