"""Core model: normalization, signatures, equivalence, evaluation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomprod import (
    ExactExponent,
    Factor,
    IndexRangeError,
    InvalidIndexError,
    SequenceSpec,
    Signature,
    StringProduct,
    equivalent,
    evaluate,
    normalize,
    power,
    product,
    signature,
)

from .support import (
    equivalent_variant,
    random_product,
    same_total_variant,
    sample_admissible,
)

raw_pairs = st.lists(
    st.tuples(
        st.integers(min_value=1, max_value=15),
        st.fractions(min_value=-4, max_value=4, max_denominator=4),
    ),
    max_size=6,
)
products = raw_pairs.map(normalize)


class TestNormalize:
    def test_merges_equal_indices(self):
        p = normalize([(3, 1), (3, 1)])
        assert p.factors == (Factor(3, ExactExponent(2)),)

    def test_fraction_exponents_sum_to_one(self):
        p = normalize([(2, Fraction(1, 2)), (2, Fraction(1, 2))])
        assert p.factors == (Factor(2, ExactExponent(1)),)

    def test_cancellation_drops_factor(self):
        p = normalize([(4, 1), (7, 1), (7, -1)])
        assert p.factors == (Factor(4, ExactExponent(1)),)

    def test_sorted_ascending(self):
        p = normalize([(9, 1), (2, 1), (5, 1)])
        assert [f.index for f in p.factors] == [2, 5, 9]

    def test_invalid_index(self):
        with pytest.raises(InvalidIndexError):
            normalize([(0, 1)])
        with pytest.raises(InvalidIndexError):
            normalize([(-3, 1)])

    def test_empty_is_valid(self):
        assert normalize([]).is_empty()

    @given(raw_pairs)
    def test_idempotent(self, pairs):
        once = normalize(pairs)
        again = normalize((f.index, f.exponent) for f in once.factors)
        assert once == again

    def test_direct_construction_rejects_unsorted(self):
        f3, f4 = Factor(3, ExactExponent(1)), Factor(4, ExactExponent(1))
        with pytest.raises(ValueError):
            StringProduct((f4, f3))
        with pytest.raises(ValueError):
            StringProduct((f3, f3))

    def test_factor_invariants(self):
        with pytest.raises(InvalidIndexError):
            Factor(0, ExactExponent(1))
        with pytest.raises(ValueError):
            Factor(3, ExactExponent(0))


class TestSignature:
    def test_pair_example(self):
        sig = signature(normalize([(4, 1), (3, 1)]))
        assert sig == Signature(ExactExponent(2), ExactExponent(7))

    def test_pi_example(self):
        sig = signature(normalize([(3, ExactExponent(0, 6)), (6, 6)]))
        assert sig.total == ExactExponent(6, 6)
        assert sig.weighted_sum == ExactExponent(36, 18)

    def test_empty(self):
        assert signature(normalize([])) == Signature(ExactExponent(0), ExactExponent(0))

    @given(products, products)
    def test_additive_under_product(self, p, q):
        assert signature(product(p, q)) == signature(p) + signature(q)


class TestEquivalence:
    def test_sum_seven_pairs(self):
        assert equivalent(normalize([(4, 1), (3, 1)]), normalize([(6, 1), (1, 1)]))
        assert equivalent(normalize([(4, 1), (3, 1)]), normalize([(5, 1), (2, 1)]))

    def test_fractional_weights(self):
        lhs = normalize([(5, 1), (2, Fraction(1, 2))])
        rhs = normalize([(4, Fraction(3, 2))])
        assert equivalent(lhs, rhs)

    def test_different_sums_are_not_equal(self):
        assert not equivalent(
            normalize([(4, 1), (3, 1)]), normalize([(5, 1), (3, 1)])
        )


class TestProductPower:
    def test_product_merges(self):
        p = normalize([(3, 1)])
        assert product(p, p).factors == (Factor(3, ExactExponent(2)),)

    def test_power_cancels(self):
        p = normalize([(4, Fraction(3, 2))])
        assert power(p, Fraction(2, 3)).factors == (Factor(4, ExactExponent(1)),)

    @given(products)
    def test_power_zero_empties(self, p):
        assert power(p, 0).is_empty()

    def test_operators(self):
        p = normalize([(3, 1)])
        assert p * p == normalize([(3, 2)])
        assert p ** Fraction(1, 2) == normalize([(3, Fraction(1, 2))])


class TestEvaluate:
    def test_hand_computed_value(self):
        # a3 = 4, a4 = 8 for a1=1, r=2, so the product is 32 = 2**5
        p = normalize([(3, 1), (4, 1)])
        assert evaluate(p, SequenceSpec(1.0, 2.0, 6)) == pytest.approx(32.0, rel=1e-12)

    def test_equal_sum_gives_equal_value(self):
        q = normalize([(5, 1), (2, 1)])
        assert evaluate(q, SequenceSpec(1.0, 2.0, 6)) == pytest.approx(32.0, rel=1e-12)

    def test_empty_product_is_one(self):
        assert evaluate(normalize([]), SequenceSpec(0.7, 1.3, 1)) == 1.0

    def test_index_beyond_length(self):
        with pytest.raises(IndexRangeError):
            evaluate(normalize([(7, 1)]), SequenceSpec(1.0, 2.0, 6))

    def test_requires_positive_parameters(self):
        p = normalize([(3, Fraction(1, 2))])
        with pytest.raises(ValueError):
            evaluate(p, SequenceSpec(-1.0, 2.0, 6))
        with pytest.raises(ValueError):
            evaluate(p, SequenceSpec(1.0, 0.0, 6))

    def test_overflow_reported(self):
        p = normalize([(1_000_000, 1000)])
        with pytest.raises(OverflowError):
            evaluate(p, SequenceSpec(2.0, 3.0, 2_000_000))

    def test_sequence_parameters_validated(self):
        with pytest.raises(ValueError):
            SequenceSpec(1.0, 2.0, 0)
        assert SequenceSpec(1.0, 2.0, 3).admissible()
        assert not SequenceSpec(1.0, 1.0, 3).admissible()
        assert not SequenceSpec(-1.0, 2.0, 3).admissible()


class TestNumericConsistency:
    def test_equivalent_products_agree_numerically(self):
        rng = random.Random(2024)
        for _ in range(200):
            p = random_product(rng)
            q = equivalent_variant(rng, p)
            assert equivalent(p, q)
            seq = sample_admissible(rng)
            vp, vq = evaluate(p, seq), evaluate(q, seq)
            assert abs(vp - vq) <= 1e-9 * max(abs(vp), 1.0)

    def test_same_total_different_sum_separates(self):
        rng = random.Random(77)
        seq = SequenceSpec(1.0, 2.0, 64)
        found = 0
        while found < 200:
            p = random_product(rng, allow_empty=False)
            q = same_total_variant(rng, p)
            if q is None:
                continue
            found += 1
            vp, vq = evaluate(p, seq), evaluate(q, seq)
            assert abs(vp - vq) > 1e-6 * max(abs(vp), abs(vq))

    @settings(max_examples=60)
    @given(products, products)
    def test_evaluate_multiplicative(self, p, q):
        seq = SequenceSpec(1.3, 1.7, 64)
        combined = evaluate(product(p, q), seq)
        split = evaluate(p, seq) * evaluate(q, seq)
        assert abs(combined - split) <= 1e-9 * max(abs(combined), abs(split))


class TestJson:
    def test_round_trip(self):
        p = normalize([(3, ExactExponent(0, 6)), (6, 6)])
        assert StringProduct.from_json_dict(p.to_json_dict()) == p

    def test_wire_shape(self):
        p = normalize([(3, ExactExponent(6, 1))])
        assert p.to_json_dict() == {
            "factors": [{"index": 3, "exp": {"rat": "6", "pi": "1"}}]
        }
