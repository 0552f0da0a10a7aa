# Error hierarchy shared by the services, the CLI and the HTTP endpoints.
# Each class carries the CLI exit code and the HTTP status it maps to.
from typing import Optional


class BrauerError(Exception):
    exit_code = 1
    http_status = 500


class SizeError(BrauerError, ValueError):
    """t out of range, mismatched t between operands, or a length mismatch."""

    http_status = 400


class MemoryCapError(BrauerError):
    exit_code = 3
    http_status = 413

    def __init__(self, required: int, cap: int, what: str = "dense operator of side", knob: str = "--cap or BRAUER_CAP"):
        self.required = required
        self.cap = cap
        super().__init__(f"{what} {required} exceeds the cap of {cap} (raise {knob})")


class ContractError(BrauerError, ValueError):
    http_status = 400


class ComputationError(BrauerError):
    def __init__(self, message: str, t: Optional[int] = None, d: Optional[int] = None):
        self.t = t
        self.d = d
        where = f" (t={t}, d={d})" if t is not None else ""
        super().__init__(f"{message}{where}")


class StructuralError(BrauerError):
    pass


class DomainError(BrauerError, ValueError):
    http_status = 422


class ConfigError(BrauerError, ValueError):
    exit_code = 2
    http_status = 400


class VerificationError(BrauerError):
    exit_code = 1
