import random
from fractions import Fraction

import pytest

from pascals import SextupleParams

# the worked six-point configuration used throughout the docs and tests
PAPER_PARAMS = (7, -3, 2, 5, -4, 1)

# chart coordinates (s, t) of its four special Pascals, frozen from the
# forward map and cross-checked against the published Cayley triples
# (5/36, 37/72, 1), (-49/349, 42/349, 1), (-1/16, -33/544, 1),
# (7/74, 21/148, 1) via s = -2*z1/z2, t = z0/z2
PAPER_COORDS = {
    "l1": (Fraction(-37, 36), Fraction(5, 36)),
    "l2": (Fraction(-84, 349), Fraction(-49, 349)),
    "l3": (Fraction(33, 272), Fraction(-1, 16)),
    "lstar": (Fraction(-21, 74), Fraction(7, 74)),
}


@pytest.fixture
def paper_params():
    return SextupleParams(*PAPER_PARAMS)


@pytest.fixture
def rng():
    return random.Random(20240811)


def random_fraction(rng, lo=-20, hi=20, max_den=10):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
