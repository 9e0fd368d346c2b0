"""Laplacian matrices, characteristic polynomials and eigenvalue counts.

Everything here is exact: matrices hold Python integers, characteristic
polynomials are :class:`~lapspec.poly.IntPoly`, and eigenvalue questions
are answered by Sturm counting.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .families import BinaryStarParams, Variant
from .graph import Graph, complement
from .poly import IntPoly, Number, X, multiplicity_at
from .roots import count_roots_with_multiplicity

Matrix = list[list[int]]


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def laplacian(G: Graph) -> Matrix:
    """``L(G) = D(G) - A(G)`` as a list of integer rows."""
    n = G.n
    L = [[0] * n for _ in range(n)]
    for i, row in enumerate(G.adj):
        Li = L[i]
        Li[i] = row.bit_count()
        for j in range(n):
            if row >> j & 1:
                Li[j] = -1
    return L


# characteristic polynomials -----------------------------------------------------


def charpoly_matrix(M: Sequence[Sequence[int]]) -> IntPoly:
    """``det(xI - M)`` by Faddeev-LeVerrier; every division is exact in Z."""
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # P holds M @ (previous adjugate term); c_{n-k} = -tr(M @ N_k) / k
    P = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        for i in range(n):
            P[i][i] += c
        cols = list(zip(*P))
        P = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in M]
        c, rem = divmod(-sum(P[i][i] for i in range(n)), k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = c
    return IntPoly(coeffs)


@lru_cache(maxsize=65536)
def charpoly(G: Graph) -> IntPoly:
    """``μ(G, x) = det(xI - L(G))``."""
    return charpoly_matrix(laplacian(G))


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            Ai, Ak = A[i], A[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * akk - aik * Ak[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def charpoly_bareiss(G: Graph) -> IntPoly:
    """``μ(G, x)`` by Lagrange interpolation of ``det(kI - L)`` at ``k = 0..n``.

    Independent of :func:`charpoly`; used as a cross-check.
    """
    n = G.n
    L = laplacian(G)
    values = []
    for k in range(n + 1):
        M = [[(k if i == j else 0) - L[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_det(M))
    acc = [Fraction(0)] * (n + 1)
    for k, yk in enumerate(values):
        if not yk:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j in range(n + 1):
            if j == k:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= j * basis[t + 1]
            denom *= k - j
        for t, b in enumerate(basis):
            acc[t] += yk * b / denom
    if any(c.denominator != 1 for c in acc):
        raise ArithmeticError("interpolated characteristic polynomial is not integral")
    return IntPoly(int(c) for c in acc)


def charpoly_join(G1: Graph, G2: Graph) -> IntPoly:
    """``μ(G1 ∇ G2)`` from the spectra of the parts."""
    n1, n2 = G1.n, G2.n
    num = X * (X - (n1 + n2)) * charpoly(G1).shift(-n2) * charpoly(G2).shift(-n1)
    return num.exact_divide((X - n1) * (X - n2))


def charpoly_double_star(p: int, r: int) -> IntPoly:
    """``μ(S(p, r)) = x (x-1)^(n-4) (x^3 - (n+2)x^2 + (2n+pr+1)x - n)``."""
    if p < 0 or r < 0 or p + r < 2:
        raise ValueError(f"double star closed form needs p + r >= 2, got p={p}, r={r}")
    n = p + r + 2
    cubic = IntPoly((-n, 2 * n + p * r + 1, -(n + 2), 1))
    return X * (X - 1) ** (n - 4) * cubic


def _quartic(a1: int, a2: int, a3: int, a4: int) -> IntPoly:
    return IntPoly((a4, -a3, a2, -a1, 1))


def binary_star_quartic(p: int, q: int, r: int) -> IntPoly:
    """Quartic factor ``f`` of ``μ(B(p, q, r))``."""
    s = 2 * q + p + r
    return _quartic(
        s + 4,
        q * q + (p + r) * q + p * r + 3 * s + 5,
        2 * (q * q + p * q + r * q + p * r + 3 * q + p + r + 1),
        (p + q + r + 2) * q,
    )


def binary_star_prime_quartic(p: int, q: int, r: int) -> IntPoly:
    """Quartic factor ``h`` of ``μ(B'(p, q, r))``."""
    s = 2 * q + p + r
    return _quartic(
        s + 6,
        q * q + (p + r) * q + p * r + 4 * s + 13,
        2 * (q * q + p * q + r * q + p * r) + 5 * s + 12,
        q * q + (p + r) * q + 2 * s + 4,
    )


def binary_star_cubic(p: int, q: int) -> IntPoly:
    """Cubic factor of ``μ(B(p, q, 0))``."""
    return IntPoly((-(p + q + 2) * q, q * q + p * q + 4 * q + 2 * p + 2, -(2 * q + p + 3), 1))


def double_star_cubic(p: int, r: int) -> IntPoly:
    """Cubic factor ``g`` of ``μ(S(p, r))``."""
    return IntPoly((-(p + r + 2), 2 * p + 2 * r + p * r + 5, -(p + r + 4), 1))


def charpoly_binary_star(p: int, q: int, r: int) -> IntPoly:
    if q < 1 or p < 0 or r < 0:
        raise ValueError(f"B(p,q,r) needs q >= 1 and p, r >= 0, got ({p},{q},{r})")
    n = p + q + r + 2
    if p == 0 and r == 0:
        return X * (X - 2) ** (q - 1) * (X - q) * (X - n)
    if p == 0 or r == 0:
        s = max(p, r)
        return X * (X - 1) ** (s - 1) * (X - 2) ** (q - 1) * binary_star_cubic(s, q)
    return X * (X - 1) ** (p + r - 2) * (X - 2) ** (q - 1) * binary_star_quartic(p, q, r)


def charpoly_binary_star_prime(p: int, q: int, r: int) -> IntPoly:
    if min(p, q, r) < 0 or p + q + r < 1:
        raise ValueError(f"B'(p,q,r) closed form needs p + q + r >= 1, got ({p},{q},{r})")
    if p < r:
        p, r = r, p
    n = p + q + r + 2
    if r == 0 and q >= 1:
        return X * (X - 1) ** p * (X - 2) ** (q - 1) * (X - (q + 2)) * (X - n)
    # negative exponents in the general formula become exact divisions
    num = X * (X - 1) ** max(p + r - 2, 0) * (X - 2) ** max(q - 1, 0)
    num = num * binary_star_prime_quartic(p, q, r)
    den = (X - 1) ** max(2 - p - r, 0) * (X - 2) ** max(1 - q, 0)
    return num.exact_divide(den)


def charpoly_binary_star_params(params: BinaryStarParams) -> IntPoly:
    if params.variant is Variant.B:
        return charpoly_binary_star(params.p, params.q, params.r)
    return charpoly_binary_star_prime(params.p, params.q, params.r)


def charpoly_k1_join_family(n: int, m: int) -> IntPoly:
    """``μ(K_1 ∇ K_{n-m} ∇ K_{m-1}) = x (x-(n-m)) (x-(n-1))^(m-2) (x-n)^(n-m)``."""
    if not 2 <= m <= n - 1:
        raise ValueError(f"need 2 <= m <= n-1, got n={n}, m={m}")
    return X * (X - (n - m)) * (X - (n - 1)) ** (m - 2) * (X - n) ** (n - m)


# eigenvalue counting -----------------------------------------------------------


def m_count(G: Graph, a: Optional[Number], b: Optional[Number],
            include_a: bool = True, include_b: bool = True) -> int:
    """Number of Laplacian eigenvalues of ``G`` in the interval, with multiplicity."""
    return count_roots_with_multiplicity(charpoly(G), a, b, include_a, include_b)


def lambda_k_vs(G: Graph, k: int, c: Number) -> Order:
    """Compare the ``k``-th largest Laplacian eigenvalue with ``c``.

    ``λ_k > c`` iff at least ``k`` eigenvalues lie in ``(c, ∞)``;
    ``λ_k >= c`` iff at least ``k`` lie in ``[c, ∞)``.
    """
    if not 1 <= k <= G.n:
        raise ValueError(f"eigenvalue index must be in 1..{G.n}, got {k}")
    mu = charpoly(G)
    above = count_roots_with_multiplicity(mu, c, None, include_a=False)
    if above >= k:
        return Order.GREATER
    if above + multiplicity_at(mu, Fraction(c)) >= k:
        return Order.EQUAL
    return Order.LESS


def algebraic_connectivity_positive(G: Graph) -> bool:
    """``λ_{n-1}(G) > 0``, i.e. ``G`` is connected."""
    if G.n == 1:
        return True
    return lambda_k_vs(G, G.n - 1, 0) is Order.GREATER


def spanning_tree_count(G: Graph) -> int:
    """Number of spanning trees: ``|[x] μ(G, x)| / n``."""
    c = charpoly(G).coeff(1)
    t, rem = divmod(abs(c), G.n)
    if rem:
        raise ArithmeticError("linear coefficient not divisible by n")
    return t


def spanning_tree_count_det(G: Graph) -> int:
    """Number of spanning trees as the determinant of the reduced Laplacian."""
    if G.n == 1:
        return 1
    L = laplacian(G)
    return bareiss_det([row[1:] for row in L[1:]])


def complement_identity_check(G: Graph) -> bool:
    """Check ``x μ(G, n-x) = (-1)^(n-1) (n-x) μ(Ḡ, x)`` coefficientwise."""
    n = G.n
    mu_reflected = _reflect(charpoly(G), n)
    lhs = X * mu_reflected
    rhs = (IntPoly.const(n) - X) * charpoly(complement(G))
    if (n - 1) % 2:
        rhs = -rhs
    return lhs == rhs


def _reflect(p: IntPoly, n: int) -> IntPoly:
    """``x -> p(n - x)``."""
    flipped = IntPoly(c * (-1) ** k for k, c in enumerate(p.coeffs))  # p(-x)
    return flipped.shift(-n)


def spectrum_key(G: Graph) -> tuple[int, ...]:
    """Full coefficient vector of ``μ(G, x)``; equal keys iff L-cospectral."""
    return charpoly(G).coeffs
