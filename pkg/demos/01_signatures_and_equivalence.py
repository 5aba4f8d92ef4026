# Products of geometric-sequence terms are characterized by two exact
# invariants.  For a_n = a1 * r**(n-1), a product of terms a_b raised to
# exponents t collapses to a1**T * r**(S-T) where T is the sum of the
# exponents and S the sum of exponent*index.  This script builds a few
# products, inspects their (T, S) signatures, and shows that signature
# equality is the same thing as numeric equality.

from geomprod import (
    SequenceSpec,
    equivalent,
    evaluate,
    normalize,
    parse_product,
    render,
    signature,
)

# Build the same product two ways: from (index, exponent) pairs or by
# parsing the text syntax.  Both come back normalized: sorted by index,
# repeated indices merged, zero exponents dropped.
p = normalize([(4, 1), (3, 1)])
q = parse_product("a3 * a4")
print("normalized:", render(p), "==", render(q), "->", p == q)

sig = signature(p)
print("signature of a3*a4: T =", sig.total, ", S =", sig.weighted_sum)

# Any product with the same T and S is the same function of (a1, r).
# a6*a1 also has T=2, S=7:
r = parse_product("a6*a1")
print("a3*a4 equivalent to a1*a6:", equivalent(p, r))

# ... and a5*a3 does not (S=8), so the two evaluate differently.
s = parse_product("a5*a3")
print("a3*a4 equivalent to a3*a5:", equivalent(p, s))

# Check numerically on a concrete sequence: a1=1, r=2 gives a3=4, a4=8.
seq = SequenceSpec(a1=1.0, r=2.0, l=8)
print("values at a1=1, r=2:")
for prod in (p, r, s):
    print(f"  {render(prod):8s} -> {evaluate(prod, seq)}")

# Exponents are exact rationals, so fractional weights work the same way.
half = parse_product("a5 * a2^(1/2)")
threehalves = parse_product("a4^(3/2)")
print("a5*a2^(1/2) signature:", signature(half))
print("equivalent to a4^(3/2):", equivalent(half, threehalves))
print("both evaluate to:", evaluate(half, seq), evaluate(threehalves, seq))
