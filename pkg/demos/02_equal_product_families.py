# Whole families of equal products: every multiset of t indices with the
# same subscript sum gives the same product.  The enumerator lists them
# all, and the two-term shift a_i*a_j = a_(i-n)*a_(j+n) generates members
# of a pair family directly.

from geomprod import (
    FamilyQuery,
    InvalidShiftError,
    enumerate_family,
    normalize,
    render,
    render_identity,
    shift_identity,
    verify_identity,
)

# All ways to pick two distinct indices from 1..6 summing to 7:
print("pairs with sum 7, indices up to 6:")
for member in enumerate_family(FamilyQuery(t=2, subscript_sum=7, max_index=6)):
    print("  ", render(normalize((i, 1) for i in member)))

# Three-term families work the same way; with indices up to 8 there are
# six triples summing to 12, all of them the same product.
print("triples with sum 12, indices up to 8:")
for member in enumerate_family(FamilyQuery(t=3, subscript_sum=12, max_index=8)):
    print("  ", "+".join(map(str, member)))

# Allowing repeated indices admits forms like a4^3 (4+4+4 = 12):
with_rep = enumerate_family(FamilyQuery(3, 12, 8, repetition=True))
print("with repetition there are", len(with_rep), "multisets, e.g.", with_rep[:4])

# The shift identity rearranges a pair without changing the sum.  Shifts
# that would push an index below 1 are rejected.
for n in (1, 2):
    ident = shift_identity(4, 3, -n)
    print(f"shift by {-n}:", render_identity(ident),
          "->", "verified" if verify_identity(ident).verified else "refuted")
try:
    shift_identity(4, 3, -3)
except InvalidShiftError as exc:
    print("shift by -3 rejected:", exc)

# The enumerator prunes: at every depth the remaining sum must stay
# between the smallest and largest achievable completion, so it scales
# well past what brute force can materialize.
big = enumerate_family(FamilyQuery(t=4, subscript_sum=102, max_index=50))
print("4-subsets of 1..50 with sum 102:", len(big), "families")
