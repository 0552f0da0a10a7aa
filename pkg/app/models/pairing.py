# Pair partitions of [2t]: the basis diagrams of the Brauer algebra.
# Points are 1-indexed; points 1..t form the top row, t+1..2t the bottom row.
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from app.core.errors import ContractError

Pair = Tuple[int, int]


@dataclass(frozen=True, order=True)
class PairPartition:
    """A perfect matching of {1, ..., 2t} in canonical form.

    Canonical form: every pair is (a, b) with a < b and pairs are sorted by
    their first entry. Instances are immutable and hashable.
    """

    t: int
    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        if self.t < 1:
            raise ContractError(f"t must be positive, got {self.t}")
        if len(self.pairs) != self.t:
            raise ContractError(f"expected {self.t} pairs, got {len(self.pairs)}")
        points = sorted(p for pair in self.pairs for p in pair)
        if points != list(range(1, 2 * self.t + 1)):
            raise ContractError(f"pairs {self.pairs} do not cover 1..{2 * self.t} exactly once")
        if any(a >= b for a, b in self.pairs) or list(self.pairs) != sorted(self.pairs):
            raise ContractError(f"pairs {self.pairs} are not in canonical form")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "PairPartition":
        """Canonicalize any collection of 2-element blocks."""
        normalized = []
        for block in pairs:
            a, b = block
            normalized.append((min(a, b), max(a, b)))
        normalized.sort()
        return cls(t=len(normalized), pairs=tuple(normalized))

    @classmethod
    def identity(cls, t: int) -> "PairPartition":
        return cls(t=t, pairs=tuple((i, t + i) for i in range(1, t + 1)))

    def partner(self) -> dict:
        """Map each point to the point it is paired with."""
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def to_json(self) -> List[List[int]]:
        return [[a, b] for a, b in self.pairs]

    def __str__(self) -> str:
        return "{" + ",".join(f"{{{a},{b}}}" for a, b in self.pairs) + "}"


@dataclass(frozen=True)
class CompositionResult:
    product: PairPartition
    loops: int  # closed cycles removed while composing; callers weight by d**loops
