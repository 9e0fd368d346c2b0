"""
Binary star graphs
==================

B(p,q,r): two centres u, v sharing q degree-2 neighbours, with p and r
pendant vertices.  B'(p,q,r) adds the edge uv.  This script compares their
closed-form characteristic polynomials with the direct ones, walks through
where the top two eigenvalues sit, and counts spanning trees.
"""

from __future__ import annotations

from fractions import Fraction

from lapspec.families import BinaryStarParams, Variant, binary_star
from lapspec.roots import isolate_roots
from lapspec.spectral import (
    binary_star_prime_quartic,
    binary_star_quartic,
    charpoly,
    charpoly_binary_star,
    charpoly_binary_star_prime,
    spanning_tree_count,
)
from lapspec.verify import bracket_failures

for p, q, r in [(1, 1, 1), (2, 3, 1), (3, 2, 0), (0, 4, 0)]:
    G = binary_star(Variant.B, p, q, r)
    print(f"B({p},{q},{r}): closed form matches direct charpoly:",
          charpoly_binary_star(p, q, r) == charpoly(G))
    H = binary_star(Variant.BPrime, p, q, r)
    print(f"B'({p},{q},{r}): closed form matches direct charpoly:",
          charpoly_binary_star_prime(p, q, r) == charpoly(H))

# The quartic factor and its values at the integer cut points.
p, q, r = 3, 2, 1
f = binary_star_quartic(p, q, r)
print(f"\nquartic factor of B({p},{q},{r}):", f)
for x in (0, 1, 2, p + q + 1, p + q + 2):
    print(f"  f({x}) = {f(Fraction(x))}")
h = binary_star_prime_quartic(p, q, r)
print(f"quartic factor of B'({p},{q},{r}):", h)
for x in (0, 1, 2, p + q + 2, p + q + 3):
    print(f"  h({x}) = {h(Fraction(x))}")

# The two largest eigenvalues, isolated exactly.
G = binary_star(Variant.B, p, q, r)
lam = isolate_roots(charpoly(G)).descending()
print(f"\nlambda_1(B({p},{q},{r})) in ({float(lam[0].lo):.6f}, {float(lam[0].hi):.6f})"
      f", between {p + q + 1} and {p + q + 2}")
print(f"lambda_2(B({p},{q},{r})) in ({float(lam[1].lo):.6f}, {float(lam[1].hi):.6f})"
      f", between 2 and {p + q + 1}")
print("all bracket claims hold:", bracket_failures(BinaryStarParams(Variant.B, p, q, r)) == [])

# Spanning trees depend on q only (plus the extra edge in B').
print("\nspanning trees:")
for q in range(1, 6):
    tb = spanning_tree_count(binary_star(Variant.B, 2, q, 1))
    tp = spanning_tree_count(binary_star(Variant.BPrime, 2, q, 1))
    print(f"  q={q}: B -> {tb} (2^(q-1) q = {2 ** (q - 1) * q}),"
          f" B' -> {tp} (+2^q = {2 ** (q - 1) * q + 2 ** q})")
