# Rewriting a product as powers of few bases.  A signature (T, S) with
# S = T*k collapses to the single power a_k**T; more generally decompose()
# finds every way to write S as a positively weighted sum of n distinct
# indices with the weights summing to T.

from geomprod import collapse, decompose, parse_product, render

# a3*a5 has T=2, S=8, and 8/2 = 4, so it is exactly a4 squared:
print("collapse a3*a5 ->", collapse(parse_product("a3*a5")))
print("collapse a2*a8 ->", collapse(parse_product("a2*a8")))

# When S/T is not a positive integer there is no single-base form:
print("collapse a2*a5 ->", collapse(parse_product("a2*a5")))

# Fractional totals are fine as long as they are rational:
print("collapse a4^(3/2) ->", collapse(parse_product("a4^(3/2)")))

# decompose(t, S, n, l) lists the n-base forms.  For T=3, S=12 and two
# bases up to 8 there are exactly three:
print("two-base forms of (T=3, S=12):")
for d in decompose(3, 12, 2, 8):
    print("  ", render(d.to_product()), "  parts:", d.parts)

# n = 1 recovers collapse-style answers (2*4 = 8):
print("one-base forms of (T=2, S=8):", [d.parts for d in decompose(2, 8, 1, 8)])

# Infeasible queries are simply empty, not errors (no k with 2k = 3):
print("one-base forms of (T=2, S=3):", decompose(2, 3, 1, 8))

# Sweeping n from 1 to T enumerates every power form of one signature:
print("all power forms of (T=4, S=16) with indices up to 8:")
for parts in range(1, 5):
    for d in decompose(4, 16, parts, 8):
        print(f"  n={parts}:", render(d.to_product()))
