# Weights do not need to be integers.  Solving
#     w1 + w2 = t,   w1*i + w2*j = t*k
# in exact rational arithmetic turns two source terms into a prescribed
# power of a target term.  Exponents may even carry an exact multiple of
# pi: the engine works in the domain q + p*pi with rational q, p, where
# equality stays decidable componentwise.

from fractions import Fraction

from geomprod import (
    ExactExponent,
    Identity,
    normalize,
    parse_identity,
    render_identity,
    solve_rational_weights,
    verify_identity,
)

# Send a5 and a2 onto a4^(3/2): the solver returns w1=1, w2=1/2.
w1, w2 = solve_rational_weights(5, 2, 4, Fraction(3, 2))
print("weights for a5, a2 -> a4^(3/2):", w1, w2)
ident = Identity(normalize([(5, w1), (2, w2)]), normalize([(4, Fraction(3, 2))]))
print(" ", render_identity(ident), "->", verify_identity(ident).verified)

# The target does not have to sit between the sources; weights can go
# negative, which is division by the corresponding term.
w1, w2 = solve_rational_weights(5, 2, 8, Fraction(1))
print("weights for a5, a2 -> a8:", w1, w2)

# Exponents of the form q + p*pi are stored exactly.  These two products
# have total exponent 6 + 6*pi and weighted sum 36 + 18*pi on both sides,
# so they are identically equal for every admissible sequence:
ident = parse_identity("a3^(6pi) * a6^6 = a2^(5pi+2) * a8^(pi+4)")
verdict = verify_identity(ident)
print("pi-weighted identity:", render_identity(ident))
print("  T =", verdict.lhs_signature.total, " S =", verdict.lhs_signature.weighted_sum)
print("  verified:", verdict.verified)

# Equality of the signature components really is componentwise equality
# of exact rationals; nothing is compared in floating point.
assert verdict.lhs_signature.total == ExactExponent(6, 6)
assert verdict.lhs_signature.weighted_sum == ExactExponent(36, 18)

# LaTeX rendering for writeups:
print("latex:", render_identity(ident, "latex"))

# Perturb one exponent and the signatures no longer match:
broken = parse_identity("a3^(6pi) * a6^6 = a2^(5pi+2) * a8^(pi+3)")
v = verify_identity(broken)
print("perturbed rhs -> verified:", v.verified,
      "(S differs:", str(v.lhs_signature.weighted_sum), "vs",
      str(v.rhs_signature.weighted_sum) + ")")
