# Records produced by the exact-design machinery.
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class DesignConstraintSet:
    """Constraints r**k == value on the conjugate overlap r = |<psi*|psi>|.

    ``constraints`` holds (k, value) with k = t - p for each propagating
    class p < t, in increasing k.
    """

    t: int
    d: int
    constraints: Tuple[Tuple[int, Fraction], ...]
    consistent: bool
    witness_r_squared: Optional[float] = None
    notes: Tuple[str, ...] = ()

    def value_for(self, k: int) -> Optional[Fraction]:
        for exponent, value in self.constraints:
            if exponent == k:
                return value
        return None


@dataclass(frozen=True)
class MomentReport:
    t: int
    d: int
    trace_distance_numeric: float
    one_norm: float
    min_eigenvalue_check: float
    trace_distance_exact: Optional[Fraction] = None
    trace_distance_bound: Optional[Fraction] = None  # 1 - P/Z, never below the exact value
    notes: List[str] = field(default_factory=list)

    @property
    def discrepancy(self) -> Optional[float]:
        if self.trace_distance_exact is None:
            return None
        return abs(self.trace_distance_numeric - float(self.trace_distance_exact))


@dataclass(frozen=True)
class DistanceBounds:
    t: int
    d: int
    trace_distance: Fraction
    closed_form: Fraction  # 1 - P/Z, an upper bound on trace_distance
    lower_exponential: float  # 1 - exp(-t(t-1)/(6d)), valid for t < d/2
    upper_exponential: float  # 1 - exp(-t(t-1)/d), valid for t < d/2
    lower_quadratic: float  # t(t-1)/(12d), valid for t < sqrt(d)
    upper_quadratic: float  # t(t-1)/d, valid for t < sqrt(d)
    exponential_regime: bool
    quadratic_regime: bool


@dataclass(frozen=True)
class OverlapScanPoint:
    r: float
    trace_distance: float
