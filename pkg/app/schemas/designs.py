from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.models.designs import DesignConstraintSet, MomentReport, OverlapScanPoint
from app.schemas.common import Rational, RationalField


class MomentReportRead(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    t: int
    d: int
    trace_distance_numeric: float
    trace_distance_exact: Optional[RationalField] = None
    trace_distance_bound: Optional[RationalField] = Field(None, description="1 - P/Z, an upper bound on the exact distance")
    discrepancy: Optional[float] = Field(None, description="|numeric - exact| when the exact distance is known")
    one_norm: float = Field(..., description="2 * trace distance")
    min_eigenvalue_check: float
    notes: List[str] = []

    @classmethod
    def from_domain(cls, report: MomentReport) -> "MomentReportRead":
        return cls.model_validate(report)


class ConstraintRead(BaseModel):
    exponent: int = Field(..., description="k in r**k = value")
    required_value: Rational
    required_value_float: float


class DesignConstraintSetRead(BaseModel):
    t: int
    d: int
    constraints: List[ConstraintRead]
    consistent: bool
    witness_r_squared: Optional[float] = None
    notes: List[str] = []

    @classmethod
    def from_domain(cls, cs: DesignConstraintSet) -> "DesignConstraintSetRead":
        return cls(
            t=cs.t,
            d=cs.d,
            constraints=[
                ConstraintRead(exponent=k, required_value=Rational.from_fraction(v), required_value_float=float(v))
                for k, v in cs.constraints
            ],
            consistent=cs.consistent,
            witness_r_squared=cs.witness_r_squared,
            notes=list(cs.notes),
        )


class DistanceBoundsRead(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    t: int
    d: int
    trace_distance: RationalField
    closed_form: RationalField = Field(..., description="1 - P/Z, an upper bound on trace_distance")
    lower_exponential: float
    upper_exponential: float
    lower_quadratic: float
    upper_quadratic: float
    exponential_regime: bool = Field(..., description="t < d/2: exponential sandwich applies")
    quadratic_regime: bool = Field(..., description="t < sqrt(d): quadratic window applies")


class ApproximateOrderRead(BaseModel):
    d: int
    eps: float
    t_max: int = Field(..., description="Largest t with ||rho_br - rho_sym||_1 <= eps")
    one_norm_at_t_max: RationalField


class ScanPointRead(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    r: float
    trace_distance: float


class OverlapScanRead(BaseModel):
    t: int
    d: int
    points: List[ScanPointRead]
    best_r: float
    best_trace_distance: float

    @classmethod
    def from_domain(cls, t: int, d: int, scan: List[OverlapScanPoint]) -> "OverlapScanRead":
        best = min(scan, key=lambda p: p.trace_distance)
        return cls(
            t=t,
            d=d,
            points=[ScanPointRead.model_validate(p) for p in scan],
            best_r=best.r,
            best_trace_distance=best.trace_distance,
        )
