from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from app.core.errors import BrauerError
from app.schemas.sampling import ExperimentResultRead
from app.services.sampling import helstrom_experiment

router = APIRouter()


@router.get("/helstrom", response_model=ExperimentResultRead)
def run_helstrom_experiment(
    t: int = Query(..., ge=1),
    d: int = Query(..., ge=1),
    n_samples: int = Query(20000, ge=1, le=200000),
    seed: Optional[int] = Query(None, ge=0),
    workers: Optional[int] = Query(None, ge=1),
):
    """
    Monte Carlo estimate of the optimal real-vs-complex success probability.
    """
    try:
        return ExperimentResultRead.model_validate(helstrom_experiment(t, d, n_samples, seed=seed, workers=workers))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
