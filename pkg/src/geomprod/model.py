"""Core data model: products of geometric-sequence terms and their signature.

A term of a geometric sequence with first term ``a1`` and common ratio ``r``
is ``a_b = a1 * r**(b-1)``.  A product of such terms, each raised to an exact
exponent, is therefore determined by just two numbers:

    total        T = sum of the exponents
    weighted_sum S = sum of exponent * index

because the product collapses to ``a1**T * r**(S-T)``.  The pair ``(T, S)``
is the :class:`Signature`, and two normalized products are equal as functions
of every admissible ``(a1, r)`` exactly when their signatures match.  That
signature comparison is the single equivalence decision the rest of the
package builds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import ExactExponent, RationalLike, as_rational

__all__ = [
    "InvalidIndexError",
    "IndexRangeError",
    "SequenceSpec",
    "Factor",
    "StringProduct",
    "Signature",
    "normalize",
    "signature",
    "equivalent",
    "product",
    "power",
    "evaluate",
]

ExponentLike = ExactExponent | Fraction | int | str


class InvalidIndexError(ValueError):
    """A term index below 1 was supplied."""


class IndexRangeError(ValueError):
    """A term index exceeds the sequence length available for evaluation."""


def _as_exponent(value: ExponentLike) -> ExactExponent:
    if isinstance(value, ExactExponent):
        return value
    return ExactExponent(as_rational(value))


@dataclass(frozen=True)
class SequenceSpec:
    """Concrete geometric sequence used for numeric evaluation.

    ``l`` is the largest usable index.  Evaluation additionally needs
    ``a1 > 0`` and ``r > 0`` so that fractional exponents stay real;
    :meth:`admissible` also excludes ``r = 1``, the degenerate ratio at which
    all equal-length products coincide and equivalence testing loses its
    converse direction.
    """

    a1: float
    r: float
    l: int

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError(f"sequence length must be >= 1, got {self.l}")

    def admissible(self) -> bool:
        return self.a1 > 0 and self.r > 0 and self.r != 1


@dataclass(frozen=True)
class Factor:
    """One term ``a_index`` raised to a nonzero exact exponent."""

    index: int
    exponent: ExactExponent

    def __post_init__(self) -> None:
        if self.index < 1:
            raise InvalidIndexError(f"term index must be >= 1, got {self.index}")
        if self.exponent.is_zero():
            raise ValueError("factors with zero exponent are not representable")


@dataclass(frozen=True)
class StringProduct:
    """Normalized product of sequence terms.

    Factors are stored sorted by strictly ascending index with no zero
    exponents; the empty tuple represents the product 1.  Use
    :func:`normalize` to build one from arbitrary (index, exponent) pairs.
    """

    factors: tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        indices = [f.index for f in self.factors]
        if any(b >= c for b, c in zip(indices, indices[1:])):
            raise ValueError("factors must be sorted by strictly ascending index")

    def is_empty(self) -> bool:
        return not self.factors

    def max_index(self) -> int:
        """Largest index present, or 0 for the empty product."""
        return self.factors[-1].index if self.factors else 0

    def __mul__(self, other: StringProduct) -> StringProduct:
        if not isinstance(other, StringProduct):
            return NotImplemented
        return product(self, other)

    def __pow__(self, c: RationalLike) -> StringProduct:
        return power(self, c)

    def to_json_dict(self) -> dict:
        return {
            "factors": [
                {"index": f.index, "exp": f.exponent.to_json_dict()}
                for f in self.factors
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> StringProduct:
        return normalize(
            (item["index"], ExactExponent.from_json_dict(item["exp"]))
            for item in data["factors"]
        )


EMPTY = StringProduct()


@dataclass(frozen=True)
class Signature:
    """The exact invariant (total exponent, index-weighted exponent sum)."""

    total: ExactExponent
    weighted_sum: ExactExponent

    def __add__(self, other: Signature) -> Signature:
        if not isinstance(other, Signature):
            return NotImplemented
        return Signature(self.total + other.total, self.weighted_sum + other.weighted_sum)

    def to_json_dict(self) -> dict[str, str]:
        return {"total": str(self.total), "weighted_sum": str(self.weighted_sum)}


def normalize(raw_factors: Iterable[tuple[int, ExponentLike]]) -> StringProduct:
    """Build a normalized product from (index, exponent) pairs.

    Repeated indices are merged by adding exponents, zero exponents are
    dropped, and factors come out sorted by index.  Raises
    :class:`InvalidIndexError` for indices below 1.
    """
    merged: dict[int, ExactExponent] = {}
    for index, exponent in raw_factors:
        if index < 1:
            raise InvalidIndexError(f"term index must be >= 1, got {index}")
        exp = _as_exponent(exponent)
        if index in merged:
            merged[index] = merged[index] + exp
        else:
            merged[index] = exp
    factors = tuple(
        Factor(index, exp) for index, exp in sorted(merged.items()) if not exp.is_zero()
    )
    return StringProduct(factors)


def signature(p: StringProduct) -> Signature:
    """Exact signature of ``p``; (0, 0) for the empty product."""
    total = ExactExponent()
    weighted = ExactExponent()
    for f in p.factors:
        total = total + f.exponent
        weighted = weighted + f.exponent.scale(f.index)
    return Signature(total, weighted)


def equivalent(p: StringProduct, q: StringProduct) -> bool:
    """True iff ``p`` and ``q`` have equal value for every admissible sequence.

    Decided exactly by componentwise signature equality: same total exponent
    and same weighted index sum.
    """
    return signature(p) == signature(q)


def product(p: StringProduct, q: StringProduct) -> StringProduct:
    """Merge two products and renormalize; signatures add."""
    pairs = [(f.index, f.exponent) for f in p.factors]
    pairs += [(f.index, f.exponent) for f in q.factors]
    return normalize(pairs)


def power(p: StringProduct, c: RationalLike) -> StringProduct:
    """Raise ``p`` to the rational power ``c`` by scaling every exponent."""
    c = as_rational(c)
    return normalize((f.index, f.exponent.scale(c)) for f in p.factors)


def evaluate(p: StringProduct, seq: SequenceSpec) -> float:
    """Evaluate ``p`` on a concrete sequence via ``a1**T * r**(S-T)``.

    Requires every factor index <= ``seq.l`` (:class:`IndexRangeError`
    otherwise) and positive ``a1``, ``r``.  A non-finite or underflowed
    result raises :class:`OverflowError`.
    """
    for f in p.factors:
        if f.index > seq.l:
            raise IndexRangeError(
                f"index {f.index} exceeds sequence length {seq.l}"
            )
    if not (seq.a1 > 0 and seq.r > 0):
        raise ValueError("evaluation requires a1 > 0 and r > 0")
    sig = signature(p)
    total = sig.total.to_real()
    ratio_power = (sig.weighted_sum - sig.total).to_real()
    try:
        value = (seq.a1 ** total) * (seq.r ** ratio_power)
    except OverflowError:
        raise OverflowError("product overflowed during evaluation") from None
    if not math.isfinite(value) or value <= 0.0:
        raise OverflowError("product evaluation left the finite positive range")
    return value
