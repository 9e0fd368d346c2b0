from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from lapspec.enumeration import graphs
from lapspec.graph import empty
from lapspec.graph6 import HEADER, Graph6Error, Graph6OrderError, decode, encode

from conftest import graphs_st, to_nx


def test_single_vertex():
    assert encode(empty(1)) == "@"
    assert decode("@") == empty(1)


def test_malformed():
    for bad in ["garbage\x01", "", "A`", "A@@", "B~", "?"]:
        with pytest.raises(Graph6Error):
            decode(bad)


def test_header_and_bytes():
    assert decode(HEADER + "A_").num_edges == 1
    assert decode(b"A_\n").num_edges == 1


def test_big_order_is_cap_error():
    with pytest.raises(Graph6OrderError):
        decode("~?AA" + "?" * 10)


def test_round_trip_enumerated():
    for n in range(1, 8):
        for G in graphs(n):
            assert decode(encode(G)) == G


@given(graphs_st(max_n=12))
def test_matches_networkx(G):
    ours = encode(G)
    assert ours == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(map(sorted, back.edges())) == sorted(map(list, G.edges()))


def test_order_64_round_trip():
    G = empty(64)
    assert decode(encode(G)) == G
    assert encode(G).startswith("~")
