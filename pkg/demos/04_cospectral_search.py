"""
Laplacian cospectral graphs and spectral determination
======================================================

Enumerate graphs up to isomorphism, group them by characteristic polynomial
and look at the classes with more than one member.  Binary stars with
p = r should always sit alone in their class.
"""

from __future__ import annotations

from lapspec import graph6
from lapspec.enumeration import graph_forms
from lapspec.families import Variant, binary_star
from lapspec.graph import degree_sequence
from lapspec.spectral import spanning_tree_count
from lapspec.verify import (
    cospectral_groups,
    dls_check,
    feasible_degree_sequences,
    s_minus_one_candidate,
    s_minus_two_candidates,
    verify_cospectral_invariants,
)

for n in range(1, 8):
    print(f"n={n}: {len(graph_forms(n))} graphs, {len(graph_forms(n, True))} connected")

print("\nsmallest cospectral pairs (n = 6):")
for key, members in sorted(cospectral_groups(6).items()):
    if len(members) > 1:
        print("  ", [graph6.encode(G) for G in members], [degree_sequence(G) for G in members])

print()
print(verify_cospectral_invariants(6).to_text().splitlines()[0])
print(dls_check(7).to_text().splitlines()[0])

# Degree sequences a cospectral mate of B(p,q,p) could have.
for n, p, q in [(6, 1, 2), (6, 0, 4), (7, 0, 5), (8, 1, 4)]:
    print(f"\nB({p},{q},{p}) feasible degree sequences:", feasible_degree_sequences(n, p, q, Variant.B))

# Same degree sequence as B(p,q,p), but a different number of spanning trees.
p, q = 2, 4
print(f"\nB({p},{q},{p}) spanning trees:", spanning_tree_count(binary_star(Variant.B, p, q, p)))
for name, G in s_minus_two_candidates(p, q).items():
    print(f"  {name} candidate: {spanning_tree_count(G)} trees, degrees {degree_sequence(G)}")
print("  pendant-extended B' candidate:", spanning_tree_count(s_minus_one_candidate(p, q)), "trees")
