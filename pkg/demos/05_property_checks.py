"""
Property checks on random and exhaustive graph sets
===================================================

Each check returns a Report; JSON output is what the command-line tool
prints with ``--format json``.
"""

from __future__ import annotations

from lapspec.verify import (
    verify_complement_identity,
    verify_degree_eigenvalue_bounds,
    verify_interlacing,
    verify_multiplicity_lemmas,
)

# eigenvalue 1 multiplicity >= star degree; eigenvalue 2 multiplicity >=
# |N(u,v)| - 1 for each class of degree-2 vertices with neighbourhood {u, v}
print(verify_multiplicity_lemmas(6, random_trials=200, seed=1).to_text())

# removing an edge never raises an eigenvalue, and lowers each by at most
# one position in the ordering
print(verify_interlacing(100, seed=1).to_text())

# x mu(G, n - x) = (-1)^(n-1) (n - x) mu(complement, x)
print(verify_complement_identity(6).to_text())

# d1 <= lambda1 - 1, d2 <= lambda2, d3 <= lambda3 + 1
print(verify_degree_eigenvalue_bounds(6).to_text())

print()
print(verify_interlacing(5, seed=9).to_json())
