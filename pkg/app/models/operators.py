# Dense operators on (C^d)^{⊗t} and pure state vectors on C^d.
from dataclasses import dataclass

import numpy as np

from app.core.errors import ContractError

HERMITIAN_TOL = 1e-10
NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """A square matrix acting on t copies of C^d.

    Row and column multi-indices are row-major with tensor factor 1 the most
    significant digit in base d. Diagram representations keep integer
    entries so products stay exact; moment operators are complex.
    """

    t: int
    d: int
    entries: np.ndarray

    def __post_init__(self):
        side = self.d ** self.t
        if self.entries.shape != (side, side):
            raise ContractError(f"expected a {side}x{side} array for t={self.t}, d={self.d}, got {self.entries.shape}")
        self.entries.setflags(write=False)

    @property
    def side(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T), initial=0.0))

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        return self.hermiticity_defect() <= tol

    def hermitian_part(self) -> np.ndarray:
        return 0.5 * (self.entries + self.entries.conj().T)

    def __sub__(self, other: "DenseOperator") -> "DenseOperator":
        return DenseOperator(self.t, self.d, self.entries - other.entries)

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        return DenseOperator(self.t, self.d, self.entries @ other.entries)


@dataclass(frozen=True, eq=False)
class StateVector:
    d: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (self.d,):
            raise ContractError(f"expected {self.d} amplitudes, got shape {self.amplitudes.shape}")
        norm = float(np.linalg.norm(self.amplitudes))
        if abs(norm - 1.0) > NORM_TOL:
            raise ContractError(f"state is not unit norm (norm={norm!r})")
        self.amplitudes.setflags(write=False)

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize: bool = False) -> "StateVector":
        amps = np.asarray(amplitudes, dtype=np.complex128).copy()
        if normalize:
            amps = amps / np.linalg.norm(amps)
        return cls(d=amps.shape[0], amplitudes=amps)

    @classmethod
    def basis(cls, d: int, k: int = 0) -> "StateVector":
        amps = np.zeros(d, dtype=np.complex128)
        amps[k] = 1.0
        return cls(d=d, amplitudes=amps)

    def is_real(self, tol: float = NORM_TOL) -> bool:
        return bool(np.max(np.abs(self.amplitudes.imag), initial=0.0) <= tol)
