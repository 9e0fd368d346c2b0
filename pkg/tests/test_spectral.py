from __future__ import annotations

import random

import networkx as nx
import pytest
import sympy
from hypothesis import given

from lapspec.families import (
    Variant,
    binary_star,
    binary_star_params,
    complete,
    cycle,
    double_star,
    k1_join_family,
    path,
    star,
)
from lapspec.graph import complement, disjoint_union, empty, join
from lapspec.poly import X, IntPoly, exact_divide
from lapspec.spectral import (
    Order,
    algebraic_connectivity_positive,
    bareiss_det,
    charpoly,
    charpoly_bareiss,
    charpoly_binary_star,
    charpoly_binary_star_prime,
    charpoly_double_star,
    charpoly_join,
    charpoly_k1_join_family,
    complement_identity_check,
    lambda_k_vs,
    laplacian,
    m_count,
    spanning_tree_count,
    spanning_tree_count_det,
    spectrum_key,
)

from conftest import graphs_st, random_graph, to_nx


def sympy_charpoly(G) -> IntPoly:
    x = sympy.Symbol("x")
    p = sympy.Matrix(laplacian(G)).charpoly(x)
    return IntPoly(reversed([int(c) for c in p.all_coeffs()]))


def test_laplacian_examples():
    assert laplacian(complete(2)) == [[1, -1], [-1, 1]]
    assert laplacian(empty(3)) == [[0] * 3] * 3


@given(graphs_st())
def test_laplacian_invariants(G):
    L = laplacian(G)
    for i in range(G.n):
        assert sum(L[i]) == 0
        assert L[i][i] == G.degree(i)
        for j in range(G.n):
            assert L[i][j] == L[j][i]
            if i != j:
                assert L[i][j] in (0, -1)


def test_laplacian_binary_star_block_pattern():
    p, q, r = 2, 3, 1
    L = laplacian(binary_star(Variant.B, p, q, r))
    u, v = p + q + r, p + q + r + 1
    assert L[u][u] == p + q and L[v][v] == q + r
    assert L[u][v] == 0
    for i in range(p):
        assert L[i][u] == -1 and L[i][v] == 0
    for i in range(p, p + q):
        assert L[i][u] == L[i][v] == -1 and L[i][i] == 2


def test_charpoly_examples():
    assert charpoly(complete(1)) == X
    assert charpoly(cycle(4)) == X * (X - 2) ** 2 * (X - 4)
    assert charpoly(double_star(2, 2)) == X * (X - 1) ** 2 * (X ** 3 - 8 * X ** 2 + 17 * X - 6)


@given(graphs_st(max_n=7))
def test_charpoly_oracles(G):
    mu = charpoly(G)
    assert mu == charpoly_bareiss(G)
    assert mu == sympy_charpoly(G)
    assert mu.coeff(0) == 0
    assert mu.coeff(G.n - 1) == -2 * G.num_edges
    assert mu.lc == 1 and mu.degree == G.n
    assert tuple(mu.coeffs) == spectrum_key(G)


def test_bareiss_det():
    assert bareiss_det([[2, 1], [1, 3]]) == 5
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_charpoly_join_examples():
    assert charpoly_join(complete(1), complete(1)) == X * (X - 2)
    for n in range(4, 9):
        for m in range(2, n):
            G1 = disjoint_union(complete(1), complete(m - 1))
            want = X * (X - (n - m)) * (X - (n - 1)) ** (m - 2) * (X - n) ** (n - m)
            assert charpoly_join(G1, complete(n - m)) == want


def test_charpoly_join_random():
    rng = random.Random(11)
    for _ in range(100):
        n1, n2 = rng.randint(1, 6), rng.randint(1, 6)
        G1, G2 = random_graph(rng, n1), random_graph(rng, n2)
        assert charpoly_join(G1, G2) == charpoly(join(G1, G2))


def test_double_star_closed_form():
    assert charpoly_double_star(2, 2) == charpoly(double_star(2, 2))
    cubic = X ** 3 - 6 * X ** 2 + 9 * X - 4
    assert exact_divide(cubic, (X - 1) ** 2) == X - 4
    assert charpoly_double_star(2, 0) == charpoly(star(4))
    with pytest.raises(ValueError):
        charpoly_double_star(1, 0)


def test_binary_star_closed_forms():
    assert charpoly_binary_star(0, 2, 0) == charpoly(cycle(4))
    assert charpoly_binary_star(1, 1, 1) == X * (X ** 4 - 8 * X ** 3 + 21 * X ** 2 - 20 * X + 5)
    assert charpoly_binary_star(1, 1, 1) == charpoly(path(5))
    assert charpoly_binary_star_prime(2, 3, 0) == X * (X - 1) ** 2 * (X - 2) ** 2 * (X - 5) * (X - 7)
    for p in range(0, 5):
        for r in range(0, 5):
            if p + r >= 2:
                assert charpoly_binary_star_prime(p, 0, r) == charpoly_double_star(p, r)
    with pytest.raises(ValueError):
        charpoly_binary_star(1, 0, 1)


def test_closed_forms_sweep_both_orders():
    for n in range(3, 12):
        for P in binary_star_params(n, p_ge_r=False):
            f = charpoly_binary_star if P.variant is Variant.B else charpoly_binary_star_prime
            assert f(P.p, P.q, P.r) == charpoly(binary_star(P)), str(P)
        for m in range(2, n):
            assert charpoly_k1_join_family(n, m) == charpoly(k1_join_family(n, m))
    assert charpoly_k1_join_family(4, 2) == X * (X - 2) * (X - 4) ** 2


def test_m_count_examples():
    for n in range(2, 10):
        assert m_count(star(n), 0, 1) == n - 1
        assert m_count(complete(n), 0, n - 1) == 1
    assert m_count(binary_star(Variant.B, 0, 4, 0), 0, 2) == 4
    assert m_count(k1_join_family(7, 3), 0, 5) == 2


@given(graphs_st())
def test_all_eigenvalues_nonnegative(G):
    assert m_count(G, 0, None) == G.n
    assert m_count(G, None, 0, include_b=False) == 0
    assert m_count(G, 0, G.n) == G.n


def test_spanning_trees():
    assert spanning_tree_count(binary_star(Variant.B, 1, 3, 2)) == 2 ** 2 * 3
    assert spanning_tree_count(binary_star(Variant.BPrime, 1, 2, 1)) == 8
    assert spanning_tree_count(path(5)) == 1
    assert spanning_tree_count(disjoint_union(path(2), path(3))) == 0
    assert spanning_tree_count(complete(6)) == 6 ** 4


@given(graphs_st(max_n=8))
def test_spanning_trees_oracle(G):
    t = spanning_tree_count(G)
    assert t == spanning_tree_count_det(G)
    H = to_nx(G)
    want = round(nx.number_of_spanning_trees(H)) if nx.is_connected(H) else 0
    assert t == want


def test_complement_identity_examples():
    assert complement_identity_check(cycle(5))
    assert charpoly(complement(cycle(5))) == charpoly(cycle(5))
    for n in range(1, 7):
        assert complement_identity_check(complete(n))
        assert charpoly(empty(n)) == X ** n


@given(graphs_st())
def test_complement_identity(G):
    assert complement_identity_check(G)


def test_lambda_k_vs():
    assert lambda_k_vs(binary_star(Variant.B, 2, 2, 2), 3, 2) is Order.EQUAL
    assert lambda_k_vs(path(5), 3, 2) is Order.LESS
    assert lambda_k_vs(star(4), 1, 4) is Order.EQUAL
    assert lambda_k_vs(complete(4), 2, 3) is Order.GREATER
    with pytest.raises(ValueError):
        lambda_k_vs(path(3), 4, 0)


@given(graphs_st(min_n=2))
def test_connectivity_via_spectrum(G):
    assert algebraic_connectivity_positive(G) == nx.is_connected(to_nx(G))
