"""
Exact Laplacian spectra
=======================

Every eigenvalue question here is answered with integer polynomials and
Sturm sequences, never with floating point.
"""

from __future__ import annotations

from fractions import Fraction

from lapspec.families import Variant, binary_star, cycle, path, star
from lapspec.poly import squarefree_decomposition
from lapspec.roots import isolate_roots
from lapspec.spectral import Order, charpoly, charpoly_bareiss, lambda_k_vs, m_count

# The characteristic polynomial of L = D - A, by Faddeev-LeVerrier.
# A second, unrelated route (Bareiss determinants + interpolation) agrees.
P5 = path(5)
mu = charpoly(P5)
print("mu(P5) =", mu)
print("same by Bareiss interpolation:", mu == charpoly_bareiss(P5))

# Squarefree decomposition exposes repeated eigenvalues.
print("\nmu(S5) factors:", [(str(f), m) for f, m in squarefree_decomposition(charpoly(star(5)))])

# Isolation: rational eigenvalues come out exactly, the rest inside tiny
# rational intervals, largest first.
print("\nspectrum of P5:")
for e in isolate_roots(mu).descending():
    print(f"  ({float(e.lo):.9f}, {float(e.hi):.9f})")
print("spectrum of C4:", [str(e.value) for e in isolate_roots(charpoly(cycle(4))).descending()])

# Interval counts with independent open/closed ends.
G = binary_star(Variant.B, 2, 3, 2)
n = G.n
print(f"\nB(2,3,2): n = {n}")
print("  m[0,2]   =", m_count(G, 0, 2))
print("  m(2,n]   =", m_count(G, 2, n, include_a=False))
print("  m[1,1]   =", m_count(G, 1, 1))
print("  m(1/2,3/2) =", m_count(G, Fraction(1, 2), Fraction(3, 2), False, False))

# Comparing the k-th largest eigenvalue with a rational uses counts only,
# so ties at multiple eigenvalues are decided exactly.
print("\nlambda_3(B(2,3,2)) vs 2:", lambda_k_vs(G, 3, 2).value)
print("lambda_3(P5) vs 2:", lambda_k_vs(P5, 3, 2).value)
assert lambda_k_vs(G, n - 1, 1) is Order.LESS
