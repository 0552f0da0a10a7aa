# Ensembles and experiment records for the Monte Carlo side.
import enum
import math
from dataclasses import dataclass
from typing import Optional

from app.core.errors import ContractError
from app.models.operators import StateVector


class EnsembleKind(str, enum.Enum):
    ORTHOGONAL_ORBIT = "orthogonal-orbit"
    UNITARY_HAAR = "unitary-haar"


@dataclass(frozen=True)
class EnsembleSpec:
    kind: EnsembleKind
    d: int
    t: int
    seed_state: Optional[StateVector] = None  # unitary-haar always uses |0>

    def __post_init__(self):
        if self.seed_state is not None and self.seed_state.d != self.d:
            raise ContractError(f"seed state has dimension {self.seed_state.d}, ensemble has d={self.d}")

    def state(self) -> StateVector:
        if self.kind is EnsembleKind.UNITARY_HAAR or self.seed_state is None:
            return StateVector.basis(self.d)
        return self.seed_state


@dataclass(frozen=True)
class ExperimentResult:
    t: int
    d: int
    n_samples: int
    empirical_success: float
    predicted_success: float
    seed: int
    workers: int
    elapsed: float  # seconds

    @property
    def std_error(self) -> float:
        p = self.empirical_success
        return math.sqrt(p * (1.0 - p) / self.n_samples)

    @property
    def deviation_in_sigma(self) -> float:
        if self.std_error == 0.0:
            return 0.0 if self.empirical_success == self.predicted_success else math.inf
        return abs(self.empirical_success - self.predicted_success) / self.std_error
