from fastapi import APIRouter, HTTPException, Query

from app.core.errors import BrauerError
from app.schemas.brauer import GramMatrixRead, PairingsRead, WeingartenRead
from app.services.brauer_linalg import gram_matrix, weingarten_matrix
from app.services.pairings import enumerate_pairings

router = APIRouter()


@router.get("/pairings", response_model=PairingsRead)
def list_pairings(t: int = Query(..., ge=1, description="Number of copies")):
    """
    All pair partitions of [2t] in global basis order.
    """
    try:
        return PairingsRead.from_basis(t, list(enumerate_pairings(t)))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))


@router.get("/gram", response_model=GramMatrixRead)
def read_gram_matrix(t: int = Query(..., ge=1), d: int = Query(..., ge=1)):
    """
    Exact Gram matrix of the diagram basis (entries as decimal strings).
    """
    try:
        return GramMatrixRead.from_domain(gram_matrix(t, d))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))


@router.get("/weingarten", response_model=WeingartenRead)
def read_weingarten_matrix(t: int = Query(..., ge=1), d: int = Query(..., ge=1)):
    """
    Pseudo-inverse of the Gram matrix with its rank and SVD cutoff.
    """
    try:
        return WeingartenRead.from_domain(weingarten_matrix(t, d))
    except BrauerError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
