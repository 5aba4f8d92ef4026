"""Exact arithmetic for the symbolic core.

Rational numbers are plain :class:`fractions.Fraction` values (always stored
reduced, positive denominator, zero as ``0/1``), re-exported here as
:data:`Rational`.  On top of them sits :class:`ExactExponent`, a formal linear
combination ``q + p*pi`` with rational ``q`` and ``p``.  This is the exponent
domain of the whole engine: equality of exponents is decidable componentwise
because pi is irrational, so two exponents are equal as real numbers exactly
when both components match.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Rational", "ExactExponent", "as_rational"]

Rational = Fraction

RationalLike = Fraction | int | str


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, string ("p/q" or "p") or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


@dataclass(frozen=True)
class ExactExponent:
    """An exact exponent of the form ``rat + pi * π``.

    Immutable and hashable; supports addition, subtraction, negation and
    scaling by a rational.  The canonical text form is ``"q"``, ``"p*pi"`` or
    ``"q+p*pi"`` with the sign of the pi term folded into the joining
    operator, e.g. ``"2-5*pi"``.
    """

    rat: Fraction = Fraction(0)
    pi: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat", as_rational(self.rat))
        object.__setattr__(self, "pi", as_rational(self.pi))

    def __add__(self, other: ExactExponent) -> ExactExponent:
        if not isinstance(other, ExactExponent):
            return NotImplemented
        return ExactExponent(self.rat + other.rat, self.pi + other.pi)

    def __sub__(self, other: ExactExponent) -> ExactExponent:
        if not isinstance(other, ExactExponent):
            return NotImplemented
        return ExactExponent(self.rat - other.rat, self.pi - other.pi)

    def __neg__(self) -> ExactExponent:
        return ExactExponent(-self.rat, -self.pi)

    def scale(self, c: RationalLike) -> ExactExponent:
        """Multiply both components by the rational ``c``."""
        c = as_rational(c)
        return ExactExponent(self.rat * c, self.pi * c)

    def __mul__(self, c: RationalLike) -> ExactExponent:
        if isinstance(c, (Fraction, int)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.rat == 0 and self.pi == 0

    def is_rational(self) -> bool:
        """True when the pi component vanishes."""
        return self.pi == 0

    def to_real(self) -> float:
        """Evaluate ``rat + pi*π`` in double precision."""
        if self.pi == 0:
            return float(self.rat)
        return float(self.rat) + float(self.pi) * math.pi

    def __str__(self) -> str:
        if self.pi == 0:
            return str(self.rat)
        if self.rat == 0:
            return f"{self.pi}*pi"
        if self.pi < 0:
            return f"{self.rat}-{-self.pi}*pi"
        return f"{self.rat}+{self.pi}*pi"

    def to_json_dict(self) -> dict[str, str]:
        return {"rat": str(self.rat), "pi": str(self.pi)}

    @classmethod
    def from_json_dict(cls, data: dict[str, str]) -> ExactExponent:
        return cls(Fraction(data["rat"]), Fraction(data["pi"]))


ZERO = ExactExponent()
ONE = ExactExponent(Fraction(1))
