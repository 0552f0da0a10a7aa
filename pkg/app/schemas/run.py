# Run configuration for the command-line runner and the report envelope it writes.
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, model_validator

from app import __version__
from app.core.config import settings
from app.models.run import Command, OutputFormat
from app.models.sampling import EnsembleKind


class RunConfig(BaseModel):
    command: Command
    t: int = Field(2, ge=1, description="Number of tensor copies")
    d: int = Field(2, ge=1, description="Local dimension")
    n_samples: int = Field(20000, ge=1, description="Monte Carlo draws for sampling commands")
    seed: int = Field(default_factory=lambda: settings.BRAUER_SEED, ge=0, lt=2 ** 64)
    workers: Optional[int] = Field(default_factory=lambda: settings.BRAUER_WORKERS, ge=1)
    output: Optional[Path] = Field(None, description="Report file; standard output when absent")
    format: OutputFormat = OutputFormat.JSON
    cap: int = Field(default_factory=lambda: settings.BRAUER_CAP, ge=1, description="Max d**t for dense operators")
    basis_cap: int = Field(
        default_factory=lambda: settings.BRAUER_BASIS_CAP, ge=1, description="Max (2t-1)!! for Gram and Weingarten work"
    )
    ensemble: EnsembleKind = EnsembleKind.UNITARY_HAAR
    overlap: Optional[float] = Field(None, ge=0.0, le=1.0, description="Conjugate overlap r of the seed state")
    real: bool = Field(False, description="Use |0> as the seed state")
    eps: float = Field(0.1, gt=0.0, lt=2.0)
    points: int = Field(21, ge=2)
    log_level: Optional[str] = None

    @model_validator(mode="after")
    def seed_state_choice_is_unambiguous(self):
        if self.real and self.overlap is not None:
            raise ValueError("--real and --overlap are mutually exclusive")
        return self


class ReportEnvelope(BaseModel):
    command: Command
    t: int
    d: int
    seed: int
    workers: Optional[int] = None
    version: str = __version__
    result: Dict[str, Any]
