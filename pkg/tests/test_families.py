from __future__ import annotations

import pytest

from lapspec.canon import is_isomorphic
from lapspec.combinatorics import independence_number_brute
from lapspec.families import (
    BinaryStarParams,
    Variant,
    binary_star,
    binary_star_params,
    complete,
    complete_multipartite,
    cycle,
    double_star,
    double_starlike,
    k1_join_family,
    path,
    star,
)
from lapspec.graph import GraphError, degree_sequence, is_connected
from lapspec.spectral import laplacian


def test_named_families():
    assert degree_sequence(star(4)) == (3, 1, 1, 1)
    assert path(5).num_edges == 4
    assert cycle(4).num_edges == 4
    assert complete(5).num_edges == 10
    with pytest.raises(GraphError):
        cycle(2)
    for n in range(4, 9):
        K = complete_multipartite([2, n - 2])
        assert K.num_edges == 2 * (n - 2)
        assert is_isomorphic(K, binary_star(Variant.B, 0, n - 2, 0))


def test_binary_star_small_cases():
    assert is_isomorphic(binary_star(Variant.B, 1, 1, 0), path(4))
    assert is_isomorphic(binary_star(Variant.B, 1, 1, 1), path(5))
    assert is_isomorphic(binary_star(Variant.B, 0, 2, 0), cycle(4))
    assert is_isomorphic(binary_star(Variant.BPrime, 1, 0, 1), path(4))
    for p in range(1, 6):
        assert is_isomorphic(binary_star(Variant.BPrime, p, 0, 0), star(p + 2))


def test_binary_star_rejects_q0():
    with pytest.raises(GraphError):
        BinaryStarParams(Variant.B, 2, 0, 1)
    with pytest.raises(GraphError):
        BinaryStarParams(Variant.B, 30, 5, 30)


def test_variant_parse():
    assert Variant.parse("B'") is Variant.BPrime
    assert Variant.parse("bprime") is Variant.BPrime
    assert Variant.parse("B") is Variant.B
    with pytest.raises(ValueError):
        Variant.parse("C")


def test_binary_star_vertex_order():
    # u_1..u_p, w_1..w_q, v_1..v_r, u, v
    G = binary_star(Variant.BPrime, 2, 3, 1)
    u, v = 6, 7
    assert G.neighbors(u) == [0, 1, 2, 3, 4, 7]
    assert G.neighbors(v) == [2, 3, 4, 5, 6]
    L = laplacian(G)
    assert [L[i][i] for i in range(8)] == [1, 1, 2, 2, 2, 1, 6, 5]


def test_binary_star_structure_all_params():
    for n in range(3, 12):
        for P in binary_star_params(n, p_ge_r=False):
            G = binary_star(P)
            extra = 1 if P.variant is Variant.BPrime else 0
            assert G.num_edges == 2 * P.q + P.p + P.r + extra
            assert is_connected(G)
            want = sorted([P.p + P.q + extra, P.r + P.q + extra] + [2] * P.q + [1] * (P.p + P.r),
                          reverse=True)
            assert degree_sequence(G) == tuple(want)
            mirror = binary_star(P.variant, P.r, P.q, P.p)
            assert is_isomorphic(G, mirror)
            assert P.normalized().p >= P.normalized().r


def test_double_star():
    assert is_isomorphic(double_star(1, 1), path(4))
    assert double_star(2, 2).num_edges == 5
    for p in range(1, 6):
        assert is_isomorphic(double_star(p, 0), star(p + 2))


def test_double_starlike():
    for p in range(1, 4):
        for r in range(1, 4):
            assert is_isomorphic(double_starlike(p, 2, r), double_star(p, r))
            assert is_isomorphic(double_starlike(p, 3, r), binary_star(Variant.B, p, 1, r))
    assert is_isomorphic(double_starlike(1, 4, 1), path(6))
    with pytest.raises(GraphError):
        double_starlike(0, 3, 1)


def test_k1_join_family():
    D = k1_join_family(4, 2)
    assert D.num_edges == 5
    for n in range(3, 10):
        for m in range(2, n):
            assert independence_number_brute(k1_join_family(n, m)) == 2
    with pytest.raises(GraphError):
        k1_join_family(5, 5)
    with pytest.raises(GraphError):
        k1_join_family(5, 1)


def test_params_listing():
    ps = binary_star_params(5)
    assert all(P.p >= P.r and P.order == 5 for P in ps)
    assert BinaryStarParams(Variant.BPrime, 1, 1, 1) in ps
    assert str(BinaryStarParams("B'", 2, 1, 1)) == "B'(2,1,1)"
