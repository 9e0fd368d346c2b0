"""
Independence number versus small Laplacian eigenvalues
======================================================

For a connected graph with independence number a, at least a Laplacian
eigenvalues lie in [0, n - a].  We sweep all connected graphs up to 7
vertices, then list the graphs where equality holds for a = 2 and a = n - 2.
"""

from __future__ import annotations

from lapspec import graph6
from lapspec.verify import (
    classify_equality_alpha2,
    classify_equality_alpha_n_minus_2,
    equality_set_alpha2,
    equality_set_alpha_n_minus_2,
    alpha_n_minus_2_families,
    verify_lower_bound,
)

print(verify_lower_bound(7).to_text())

n = 6
print(f"\nalpha = 2, n = {n}: equality graphs")
for form, G in sorted(equality_set_alpha2(n).items()):
    print("  ", form.decode(), "edges:", G.num_edges)
print(classify_equality_alpha2(n).to_text())

print(f"\nalpha = n-2, n = {n}: equality graphs and the binary star they match")
fam = alpha_n_minus_2_families(n)
for form in sorted(equality_set_alpha_n_minus_2(n)):
    print("  ", form.decode(), "=", fam.get(form, "?"))
print(classify_equality_alpha_n_minus_2(n).to_text())

# graph6 strings can be fed straight back in
G = graph6.decode(sorted(fam)[0].decode())
print("\nfirst family member has", G.n, "vertices and", G.num_edges, "edges")
