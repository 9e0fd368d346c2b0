"""Exhaustive generation of graphs up to isomorphism.

Order-``n`` classes come from order-``(n-1)`` classes by adding a vertex
with every possible neighbourhood, canonicalising and deduplicating.  For
connected graphs only connected parents with nonempty neighbourhoods are
extended: every connected graph has a non-cut vertex, so nothing is missed.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .canon import canonical_form
from .graph import Graph, is_connected
from .graph6 import decode

MAX_ENUMERATION_ORDER = 9


class ResourceCapError(ValueError):
    """Requested sweep exceeds the desk-scale limits."""


def _extend(parents: Sequence[bytes], n: int, connected: bool) -> tuple[bytes, ...]:
    seen: set[bytes] = set()
    first = 1 if connected else 0
    for form in parents:
        P = decode(form.decode("ascii"))
        rows = P.adj
        for S in range(first, 1 << (n - 1)):
            new_rows = tuple(r | ((S >> i & 1) << (n - 1)) for i, r in enumerate(rows)) + (S,)
            seen.add(canonical_form(Graph(n, new_rows)))
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def _classes(n: int, connected: bool) -> tuple[bytes, ...]:
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)
    return _extend(_classes(n - 1, connected), n, connected)


def graph_forms(n: int, connected_only: bool = False) -> tuple[bytes, ...]:
    """Canonical forms of all classes of order ``n``, ascending."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ResourceCapError(
            f"enumeration order must be in 1..{MAX_ENUMERATION_ORDER}, got {n}"
        )
    return _classes(n, connected_only)


def graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Each isomorphism class of order ``n`` once, canonically labelled, in
    ascending canonical-form order."""
    for form in graph_forms(n, connected_only):
        yield decode(form.decode("ascii"))


def graphs_labeled_brute(n: int, connected_only: bool = False) -> list[bytes]:
    """Independent oracle: canonicalise all ``2^(n(n-1)/2)`` labelled graphs."""
    pairs = [(i, j) for j in range(n) for i in range(j)]
    seen = set()
    for mask in range(1 << len(pairs)):
        G = Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
        if connected_only and not is_connected(G):
            continue
        seen.add(canonical_form(G))
    return sorted(seen)


def stream_partition(stream: Sequence[Graph] | Iterator[Graph], shards: int) -> list[list[Graph]]:
    """Round-robin split into ``shards`` disjoint lists covering the stream."""
    if shards < 1:
        raise ValueError("need at least one shard")
    out: list[list[Graph]] = [[] for _ in range(shards)]
    for k, G in enumerate(stream):
        out[k % shards].append(G)
    return out
