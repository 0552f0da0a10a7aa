"""Enumeration and composition of pair partitions (the Brauer diagram basis).

Diagram ``m`` has top row 1..t and bottom row t+1..2t. Composition ``m∘n``
stacks m above n: m's bottom row is glued to n's top row, and closed cycles
living entirely on the glued row are removed and counted.
"""
import logging
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from app.core.config import settings
from app.core.errors import SizeError
from app.models.pairing import CompositionResult, Pair, PairPartition

logger = logging.getLogger(__name__)


def _check_t(t: int) -> None:
    if t < 1 or t > settings.BRAUER_MAX_T:
        raise SizeError(f"t must lie in 1..{settings.BRAUER_MAX_T}, got {t}")


def _all_pairings(items: List[int]) -> Iterator[List[Pair]]:
    # pairing the smallest remaining point with each later point in turn
    # yields the pair lists in lexicographic order
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, item in enumerate(rest):
        for tail in _all_pairings(rest[:i] + rest[i + 1:]):
            yield [(first, item)] + tail


@lru_cache(maxsize=8)
def enumerate_pairings(t: int) -> Tuple[PairPartition, ...]:
    """All (2t-1)!! canonical pair partitions of [2t], lexicographically ordered.

    The position in this tuple is the global basis index used by every
    Gram, Weingarten and coefficient array.
    """
    _check_t(t)
    basis = tuple(PairPartition(t=t, pairs=tuple(pairs)) for pairs in _all_pairings(list(range(1, 2 * t + 1))))
    logger.debug("enumerated %d pairings for t=%d", len(basis), t)
    return basis


def propagating_number(m: PairPartition) -> int:
    return sum(1 for a, b in m.pairs if a <= m.t < b)


def is_permutation(m: PairPartition) -> bool:
    return propagating_number(m) == m.t


def embed_permutation(sigma: Sequence[int]) -> PairPartition:
    """The diagram {{σ(i), t+i}} representing σ ⊗ψ_i = ⊗ψ_{σ⁻¹(i)}."""
    t = len(sigma)
    if sorted(sigma) != list(range(1, t + 1)):
        raise SizeError(f"{tuple(sigma)} is not a permutation of 1..{t}")
    return PairPartition.from_pairs((sigma[i - 1], t + i) for i in range(1, t + 1))


def permutation_of(m: PairPartition) -> Tuple[int, ...]:
    """Inverse of embed_permutation for diagrams with propagating number t."""
    if not is_permutation(m):
        raise SizeError(f"{m} has propagating number {propagating_number(m)} < t={m.t}")
    sigma = [0] * m.t
    for a, b in m.pairs:
        sigma[b - m.t - 1] = a
    return tuple(sigma)


def compose(m: PairPartition, n: PairPartition) -> CompositionResult:
    if m.t != n.t:
        raise SizeError(f"cannot compose diagrams with t={m.t} and t={n.t}")
    t = m.t
    pm, pn = m.partner(), n.partner()
    glued = set()

    def walk(from_m: bool, point: int) -> int:
        while True:
            other = pm[point] if from_m else pn[point]
            if from_m and other <= t:
                return other
            if not from_m and other > t:
                return other
            if from_m:
                glued.add(other - t)
                from_m, point = False, other - t
            else:
                glued.add(other)
                from_m, point = True, other + t

    pairs = set()
    for i in range(1, t + 1):
        top_end = walk(True, i)
        bottom_end = walk(False, t + i)
        pairs.add((min(i, top_end), max(i, top_end)))
        pairs.add((min(t + i, bottom_end), max(t + i, bottom_end)))

    loops = 0
    for start in range(1, t + 1):
        if start in glued:
            continue
        loops += 1
        j = start
        while True:
            glued.add(j)
            j = pm[t + j] - t  # through m along the glued row
            glued.add(j)
            j = pn[j]  # back through n
            if j == start:
                break
    return CompositionResult(product=PairPartition.from_pairs(pairs), loops=loops)


def transpose_diagram(m: PairPartition) -> PairPartition:
    """Swap top and bottom rows; represents the transpose of rep(m)."""
    t = m.t

    def flip(p: int) -> int:
        return p + t if p <= t else p - t

    return PairPartition.from_pairs((flip(a), flip(b)) for a, b in m.pairs)


def union_cycle_count(m: PairPartition, n: PairPartition) -> int:
    """Cycles of the 2-regular multigraph whose edges are the pairs of m and n."""
    if m.t != n.t:
        raise SizeError(f"cannot overlay diagrams with t={m.t} and t={n.t}")
    pm, pn = m.partner(), n.partner()
    seen = set()
    cycles = 0
    for start in range(1, 2 * m.t + 1):
        if start in seen:
            continue
        cycles += 1
        p = start
        while True:
            seen.add(p)
            q = pm[p]
            seen.add(q)
            p = pn[q]
            if p == start:
                break
    return cycles


def to_json(m: PairPartition) -> List[List[int]]:
    return m.to_json()


def from_json(data: Sequence[Sequence[int]]) -> PairPartition:
    return PairPartition.from_pairs(data)
