# Shared schema pieces: exact rationals and big integers travel as decimal strings.
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, Field


class Rational(BaseModel):
    num: str = Field(..., description="Numerator as a decimal string")
    den: str = Field(..., description="Denominator as a decimal string")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Rational":
        value = Fraction(value)
        return cls(num=str(value.numerator), den=str(value.denominator))


def _coerce_rational(value: Any) -> Any:
    if isinstance(value, (Fraction, int)):
        return Rational.from_fraction(value)
    return value


RationalField = Annotated[Rational, BeforeValidator(_coerce_rational)]
