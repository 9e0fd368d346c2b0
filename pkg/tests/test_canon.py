from __future__ import annotations

import random

import networkx as nx
from hypothesis import given, strategies as st

from lapspec.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from lapspec.families import Variant, binary_star, complete, cycle, path
from lapspec.graph import empty
from lapspec.graph6 import decode
from lapspec.verify import s_minus_two_candidates

from conftest import graphs_st, random_graph, to_nx


def test_examples():
    for p, q, r in [(2, 3, 1), (0, 4, 3), (1, 1, 5)]:
        assert is_isomorphic(binary_star(Variant.B, p, q, r), binary_star(Variant.B, r, q, p))
    assert is_isomorphic(path(4), binary_star(Variant.BPrime, 1, 0, 1))
    assert not is_isomorphic(path(4), cycle(4))
    for p in range(1, 4):
        for q in range(2, 6):
            B = binary_star(Variant.B, p, q, p)
            cands = s_minus_two_candidates(p, q)
            forms = {canonical_form(G) for G in cands.values()}
            assert len(forms) == 2
            assert canonical_form(B) not in forms


def test_permutation_invariance_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 10)
        G = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(G.relabel(perm)) == canonical_form(G)


def test_regular_and_symmetric_graphs():
    # vertex-transitive inputs exercise automorphism pruning
    petersen = nx.petersen_graph()
    from lapspec.graph import Graph

    P = Graph.from_edges(10, petersen.edges())
    rng = random.Random(1)
    for _ in range(20):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(P.relabel(perm)) == canonical_form(P)
    assert canonical_form(complete(9)) == canonical_form(complete(9).relabel(list(range(8, -1, -1))))
    assert canonical_form(empty(9)) == canonical_form(empty(9))


@given(graphs_st(max_n=7), graphs_st(max_n=7))
def test_agrees_with_networkx(G, H):
    if G.n != H.n:
        return
    assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


@given(graphs_st(max_n=9), st.randoms(use_true_random=False))
def test_canonical_graph_properties(G, rng):
    C = canonical_graph(G)
    assert nx.is_isomorphic(to_nx(C), to_nx(G))
    assert decode(canonical_form(G).decode()) == C
    assert sorted(canonical_labeling(G)) == list(range(G.n))
    perm = list(range(G.n))
    rng.shuffle(perm)
    assert canonical_graph(G.relabel(perm)) == C
