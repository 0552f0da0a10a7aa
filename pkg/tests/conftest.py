from fractions import Fraction

import numpy as np
import pytest

from app.models.operators import StateVector
from app.models.pairing import PairPartition

SEED = 1234


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def t2_basis():
    """The t=2 diagrams in global basis order: gamma, identity, swap."""
    return (
        PairPartition(t=2, pairs=((1, 2), (3, 4))),
        PairPartition(t=2, pairs=((1, 3), (2, 4))),
        PairPartition(t=2, pairs=((1, 4), (2, 3))),
    )


@pytest.fixture
def random_state(rng):
    def make(d: int) -> StateVector:
        amps = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        return StateVector.from_amplitudes(amps, normalize=True)

    return make


def td_closed(d: int, t: int) -> Fraction:
    out = Fraction(1)
    for j in range(1, t):
        out *= Fraction(d + j, d + 2 * j)
    return 1 - out
