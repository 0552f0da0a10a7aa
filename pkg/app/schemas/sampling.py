from typing import List

from pydantic import BaseModel, ConfigDict, Field

from app import __version__
from app.models.sampling import EnsembleKind


class ExperimentResultRead(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    t: int
    d: int
    n_samples: int
    empirical_success: float
    predicted_success: float = Field(..., description="1/2 + Tr[P (rho_br - rho_sym)]/2 for the measured projector P")
    std_error: float
    deviation_in_sigma: float
    seed: int
    workers: int
    elapsed: float = Field(..., description="Wall-clock seconds")
    version: str = __version__


class EmpiricalMomentRead(BaseModel):
    t: int
    d: int
    ensemble: EnsembleKind
    n_samples: int
    trace: float
    max_deviation_rho_sym: float
    max_deviation_rho_br: float
    trace_distance_rho_sym: float
    trace_distance_rho_br: float


class CheckRead(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    name: str
    passed: bool
    detail: str = ""


class VerificationRead(BaseModel):
    passed: bool
    n_checks: int
    n_failed: int
    elapsed: float
    checks: List[CheckRead]
