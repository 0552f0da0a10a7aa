from typing import List

from pydantic import BaseModel, Field

from app.models.brauer import GramMatrix, WeingartenMatrix
from app.models.pairing import PairPartition
from app.services.pairings import propagating_number


class PairingsRead(BaseModel):
    t: int
    count: int = Field(..., description="(2t-1)!!")
    pairings: List[List[List[int]]] = Field(..., description="Canonical pair lists in global basis order")
    propagating_numbers: List[int]

    @classmethod
    def from_basis(cls, t: int, basis: List[PairPartition]) -> "PairingsRead":
        return cls(
            t=t,
            count=len(basis),
            pairings=[m.to_json() for m in basis],
            propagating_numbers=[propagating_number(m) for m in basis],
        )


class GramMatrixRead(BaseModel):
    t: int
    d: int
    basis: List[List[List[int]]]
    entries: List[List[str]] = Field(..., description="Exact integers d**cycles as decimal strings")

    @classmethod
    def from_domain(cls, gram: GramMatrix) -> "GramMatrixRead":
        return cls(
            t=gram.t,
            d=gram.d,
            basis=[m.to_json() for m in gram.basis],
            entries=[[str(v) for v in row] for row in gram.entries.tolist()],
        )


class WeingartenRead(BaseModel):
    t: int
    d: int
    rank: int
    cutoff: float = Field(..., description="Singular-value threshold of the pseudo-inverse")
    full_rank: bool
    entries: List[List[float]]

    @classmethod
    def from_domain(cls, w: WeingartenMatrix) -> "WeingartenRead":
        return cls(t=w.t, d=w.d, rank=w.rank, cutoff=w.cutoff, full_rank=w.full_rank, entries=w.entries.tolist())
