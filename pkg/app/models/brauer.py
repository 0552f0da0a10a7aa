# Gram and Weingarten matrices of the Brauer diagram basis.
# All matrices are indexed by the global pairing order of enumerate_pairings(t).
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.special import factorial2

from app.core.errors import SizeError
from app.models.pairing import PairPartition


def double_factorial(t: int) -> int:
    """(2t-1)!!, the number of pair partitions of [2t]."""
    return int(factorial2(2 * t - 1, exact=True))


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Exact Gram matrix (Tr[Y_i^T Y_j]) of the diagram basis.

    ``entries`` is an object array of Python ints so row sums and the
    constraint derivation stay exact for any t, d.
    """

    t: int
    d: int
    basis: Tuple[PairPartition, ...]
    entries: np.ndarray

    @property
    def size(self) -> int:
        return len(self.basis)

    def row_sums(self) -> List[int]:
        return [sum(row) for row in self.entries.tolist()]

    def as_float(self) -> np.ndarray:
        return self.entries.astype(np.float64)


@dataclass(frozen=True, eq=False)
class WeingartenMatrix:
    t: int
    d: int
    entries: np.ndarray
    rank: int
    cutoff: float  # singular values at or below this were discarded

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def full_rank(self) -> bool:
        return self.rank == self.size


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    t: int
    values: np.ndarray

    def __post_init__(self):
        expected = double_factorial(self.t)
        if self.values.shape != (expected,):
            raise SizeError(f"coefficient vector for t={self.t} needs {expected} entries, got shape {self.values.shape}")
