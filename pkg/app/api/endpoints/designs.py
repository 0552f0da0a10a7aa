from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from app.core.errors import BrauerError
from app.schemas.designs import (
    ApproximateOrderRead,
    DesignConstraintSetRead,
    DistanceBoundsRead,
    MomentReportRead,
)
from app.services import designs
from app.services.tensor_rep import harmonic_distance

router = APIRouter()


@router.get("/trace-distance", response_model=MomentReportRead)
def read_trace_distance(t: int = Query(..., ge=1), d: int = Query(..., ge=1)):
    """
    Numeric trace distance between rho_br and rho_sym next to the exact value and the 1 - P/Z bound.
    """
    try:
        return MomentReportRead.from_domain(designs.moment_report(d, t))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))


@router.get("/constraints", response_model=DesignConstraintSetRead)
def read_constraints(t: int = Query(..., ge=1), d: int = Query(..., ge=1)):
    try:
        return DesignConstraintSetRead.from_domain(designs.design_constraints(t, d))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))


@router.get("/impossibility", response_model=DesignConstraintSetRead)
def read_impossibility(t: int = Query(4, ge=4), d: int = Query(..., ge=1)):
    """
    Constraint set for t >= 4 with the exact witness of inconsistency.
    """
    try:
        return DesignConstraintSetRead.from_domain(designs.impossibility_report(t, d))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))


@router.get("/design-check", response_model=MomentReportRead)
def read_design_check(
    t: int = Query(..., ge=1),
    d: int = Query(..., ge=2),
    overlap: Optional[float] = Query(None, ge=0.0, le=1.0, description="Conjugate overlap r; defaults to sqrt(2/(d+1))"),
):
    """
    Trace distance of the orthogonal orbit of a two-amplitude state to rho_sym.
    """
    try:
        psi = designs.construct_design_state(d) if overlap is None else designs.design_state_from_overlap(d, overlap)
        return MomentReportRead.from_domain(designs.exact_design_check(psi, t))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))


@router.get("/bounds", response_model=DistanceBoundsRead)
def read_bounds(t: int = Query(..., ge=1), d: int = Query(..., ge=1)):
    return DistanceBoundsRead.model_validate(designs.distance_bounds(d, t))


@router.get("/approximate-order", response_model=ApproximateOrderRead)
def read_approximate_order(d: int = Query(..., ge=1), eps: float = Query(..., gt=0.0, lt=2.0)):
    """
    Largest t for which random real states are an eps-approximate t-design.
    """
    try:
        t_max = designs.approximate_design_order(d, eps)
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
    return ApproximateOrderRead(d=d, eps=eps, t_max=t_max, one_norm_at_t_max=2 * harmonic_distance(d, t_max))
