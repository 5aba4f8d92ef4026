"""Constructive solvers over product signatures.

Everything here manufactures or certifies equal-product identities:

* :func:`enumerate_family` lists all index multisets of a given size whose
  subscript sum hits a target, i.e. the full family of pairwise-equal
  products;
* :func:`shift_identity` produces the two-term rearrangement
  ``a_i * a_j = a_(i-n) * a_(j+n)``;
* :func:`decompose` rewrites a target signature as a weighted power form
  with a fixed number of distinct bases;
* :func:`collapse` is the single-base special case (a product that is an
  exact power of one term);
* :func:`solve_rational_weights` solves the 2x2 exact linear system for
  rational weights turning two source terms into a prescribed power of a
  target term;
* :func:`verify_identity` is the equivalence decision with both signatures
  as witness.

Enumerators use depth-first backtracking with interval pruning (the
remaining sum must stay between the smallest and largest achievable
completion at every level), so their output matches a brute-force filter
while remaining usable up to index bounds around 50.  All listings come out
in lexicographic order and are byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import as_rational
from .model import Signature, StringProduct, normalize, signature

__all__ = [
    "InvalidShiftError",
    "NoSolutionError",
    "FamilyQuery",
    "Decomposition",
    "Identity",
    "Verdict",
    "enumerate_family",
    "shift_identity",
    "decompose",
    "collapse",
    "solve_rational_weights",
    "verify_identity",
]


class InvalidShiftError(ValueError):
    """A shift would push a term index below 1."""


class NoSolutionError(ValueError):
    """The requested weight system has no solution."""


@dataclass(frozen=True)
class FamilyQuery:
    """Search space for an equal-product family.

    ``t`` is the number of terms per product, ``subscript_sum`` the target
    index sum, ``max_index`` the largest usable index.  With
    ``repetition=False`` indices within one product must be pairwise
    distinct.
    """

    t: int
    subscript_sum: int
    max_index: int
    repetition: bool = False

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"tuple size must be >= 1, got {self.t}")
        if self.subscript_sum < 1:
            raise ValueError(f"subscript sum must be >= 1, got {self.subscript_sum}")
        if self.max_index < 1:
            raise ValueError(f"max index must be >= 1, got {self.max_index}")

    def feasible(self) -> bool:
        if self.repetition:
            lo, hi = self.t, self.t * self.max_index
        else:
            if self.t > self.max_index:
                return False
            lo = self.t * (self.t + 1) // 2
            hi = self.t * self.max_index - self.t * (self.t - 1) // 2
        return lo <= self.subscript_sum <= hi


@dataclass(frozen=True)
class Decomposition:
    """Weighted power form: distinct indices with positive integer weights."""

    parts: tuple[tuple[int, int], ...]

    def total_weight(self) -> int:
        return sum(w for _, w in self.parts)

    def weighted_sum(self) -> int:
        return sum(b * w for b, w in self.parts)

    def to_product(self) -> StringProduct:
        return normalize((b, w) for b, w in self.parts)

    def to_json_dict(self) -> dict:
        return {"parts": [{"index": b, "weight": w} for b, w in self.parts]}


@dataclass(frozen=True)
class Identity:
    """A claimed equality between two products."""

    lhs: StringProduct
    rhs: StringProduct


@dataclass(frozen=True)
class Verdict:
    """Outcome of the symbolic equivalence decision.

    ``verified`` is True when both signatures match; either way the two
    signatures are carried as the explanatory witness.
    """

    verified: bool
    lhs_signature: Signature
    rhs_signature: Signature

    def __bool__(self) -> bool:
        return self.verified


def _consecutive_sum(lo: int, hi: int) -> int:
    if hi < lo:
        return 0
    return (lo + hi) * (hi - lo + 1) // 2


def enumerate_family(query: FamilyQuery) -> list[tuple[int, ...]]:
    """All index multisets of size ``t`` with the requested subscript sum.

    Returns ascending tuples in lexicographic order; an infeasible query
    yields the empty list.  Every member converted to a product has
    signature exactly ``(t, subscript_sum)``.
    """
    l = query.max_index
    rep = query.repetition
    out: list[tuple[int, ...]] = []

    def extend(min_value: int, slots: int, remaining: int, acc: list[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for v in range(min_value, l + 1):
            rest = slots - 1
            if rep:
                lo = rest * v
                hi = rest * l
            else:
                if v + rest > l:
                    break
                lo = _consecutive_sum(v + 1, v + rest)
                hi = _consecutive_sum(l - rest + 1, l)
            after = remaining - v
            if after < lo:
                break  # the floor only grows with v
            if after > hi:
                continue
            acc.append(v)
            extend(v if rep else v + 1, rest, after, acc)
            acc.pop()

    extend(1, query.t, query.subscript_sum, [])
    return out


def shift_identity(i: int, j: int, n: int) -> Identity:
    """The rearrangement ``a_i * a_j = a_(i-n) * a_(j+n)``.

    The subscript sum is preserved by construction so the identity always
    verifies.  ``n`` may be negative; a shift that drives either index below
    1 raises :class:`InvalidShiftError`.
    """
    if i < 1 or j < 1:
        raise InvalidShiftError(f"term indices must be >= 1, got ({i}, {j})")
    if i - n < 1 or j + n < 1:
        raise InvalidShiftError(
            f"shift by {n} drives an index below 1: ({i - n}, {j + n})"
        )
    lhs = normalize([(i, 1), (j, 1)])
    rhs = normalize([(i - n, 1), (j + n, 1)])
    return Identity(lhs, rhs)


def decompose(
    t: int, subscript_sum: int, parts: int, max_index: int
) -> list[Decomposition]:
    """All weighted power forms with exactly ``parts`` distinct bases.

    Finds every choice of ascending indices ``b_1 < ... < b_parts`` in
    ``[1, max_index]`` and positive integer weights summing to ``t`` whose
    weighted index sum equals ``subscript_sum``.  Output is lexicographic in
    the (index, weight) part lists; infeasible queries return the empty
    list.
    """
    if t < 1:
        raise ValueError(f"total weight must be >= 1, got {t}")
    if parts < 1 or parts > t:
        raise ValueError(f"part count must be in [1, {t}], got {parts}")
    if subscript_sum < 1:
        raise ValueError(f"subscript sum must be >= 1, got {subscript_sum}")
    if max_index < 1:
        raise ValueError(f"max index must be >= 1, got {max_index}")

    out: list[Decomposition] = []

    def extend(
        min_index: int,
        slots: int,
        weight_left: int,
        sum_left: int,
        acc: list[tuple[int, int]],
    ) -> None:
        if slots == 0:
            if weight_left == 0 and sum_left == 0:
                out.append(Decomposition(tuple(acc)))
            return
        for b in range(min_index, max_index - slots + 2):
            for w in range(1, weight_left - (slots - 1) + 1):
                after_w = weight_left - w
                after_s = sum_left - w * b
                rest = slots - 1
                if rest == 0:
                    if after_w == 0 and after_s == 0:
                        out.append(Decomposition(tuple(acc) + ((b, w),)))
                    continue
                # tightest completions: surplus weight on the smallest
                # remaining index, respectively the largest
                lo = (after_w - rest + 1) * (b + 1) + _consecutive_sum(b + 2, b + rest)
                hi = _consecutive_sum(max_index - rest + 1, max_index - 1) + (
                    after_w - rest + 1
                ) * max_index
                if after_s < lo or after_s > hi:
                    continue
                acc.append((b, w))
                extend(b + 1, rest, after_w, after_s, acc)
                acc.pop()

    extend(1, parts, t, subscript_sum, [])
    out.sort(key=lambda d: d.parts)
    return out


def collapse(p: StringProduct) -> tuple[int, Fraction] | None:
    """Express ``p`` as a single power ``a_k ** T`` when possible.

    Requires purely rational exponents and nonzero total ``T``; returns
    ``(k, T)`` with ``k = S / T`` when that quotient is a positive integer,
    else ``None``.
    """
    sig = signature(p)
    if not (sig.total.is_rational() and sig.weighted_sum.is_rational()):
        raise ValueError("collapse requires purely rational exponents")
    total = sig.total.rat
    if total == 0:
        raise ValueError("collapse requires a nonzero total exponent")
    k = sig.weighted_sum.rat / total
    if k.denominator != 1 or k < 1:
        return None
    return int(k), total


def solve_rational_weights(
    i: int, j: int, k: int, total: Fraction | int | str
) -> tuple[Fraction, Fraction]:
    """Exact weights (w1, w2) with ``a_i**w1 * a_j**w2 = a_k**total``.

    Solves ``w1 + w2 = total`` and ``w1*i + w2*j = total*k``.  For ``i != j``
    the solution is unique; the degenerate ``i == j == k`` case returns
    ``(total, 0)``, and ``i == j != k`` has no solution.
    """
    for name, value in (("i", i), ("j", j), ("k", k)):
        if value < 1:
            raise ValueError(f"index {name} must be >= 1, got {value}")
    total = as_rational(total)
    if i == j:
        if k == i:
            return total, Fraction(0)
        raise NoSolutionError(
            f"equal source indices {i} cannot reach a different target {k}"
        )
    w1 = total * (k - j) / (i - j)
    w2 = total * (i - k) / (i - j)
    return w1, w2


def verify_identity(ident: Identity) -> Verdict:
    """Decide an identity by signature comparison; never raises."""
    lhs_sig = signature(ident.lhs)
    rhs_sig = signature(ident.rhs)
    return Verdict(lhs_sig == rhs_sig, lhs_sig, rhs_sig)
