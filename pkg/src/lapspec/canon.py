"""Canonical labelling and isomorphism testing.

Individualisation-refinement: the vertex partition is refined to an
equitable one (cells split by their neighbour counts into every other cell,
new cells ordered by that signature), a vertex of the first smallest
non-singleton cell is individualised, and the search recurses.  Each
discrete partition gives a relabelling; the canonical form is the
lexicographically smallest upper-triangle bit string among them.

Two prunings keep the search small without losing correctness:

* twins: if swapping ``v`` and ``w`` is an automorphism (same neighbourhood
  apart from each other) only one of them is individualised;
* automorphisms found as pairs of leaves with equal certificates are
  recorded, and a branch whose vertex is mapped by a recorded automorphism
  (fixing the current individualised prefix) to an explored one is skipped.
"""

from __future__ import annotations

from .graph import Graph
from .graph6 import encode

CanonicalForm = bytes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(sig[k] for k in sorted(sig))
        if not split:
            return out
        cells = out


def _certificate(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle bits of the relabelled graph in graph6 column order,
    packed big-endian so integer order equals bit-string order."""
    n = len(order)
    pos = [0] * n
    for k, v in enumerate(order):
        pos[v] = k
    key = 0
    for j in range(1, n):
        row = adj[order[j]]
        col = 0
        for w in _iter_bits(row):
            i = pos[w]
            if i < j:
                col |= 1 << (j - 1 - i)
        key = (key << j) | col
    return key


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_labeling(G: Graph) -> list[int]:
    """``order`` such that ``order[k]`` is the vertex placed at position ``k``."""
    adj = G.adj
    n = G.n
    best_key: int | None = None
    best_order: list[int] = []
    leaves: dict[int, list[int]] = {}
    autos: list[list[int]] = []

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_key, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            key = _certificate(adj, order)
            other = leaves.get(key)
            if other is not None:
                # order -> other is an automorphism
                perm = [0] * n
                for a, b in zip(order, other):
                    perm[a] = b
                autos.append(perm)
            else:
                leaves[key] = order
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, v, w) for w in tried):
                continue
            if tried and _covered(v, tried, fixed, autos):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:], fixed + [v])

    search([list(range(n))], [])
    return best_order


def _twins(adj: tuple[int, ...], v: int, w: int) -> bool:
    return adj[v] & ~(1 << w) == adj[w] & ~(1 << v)


def _covered(v: int, tried: list[int], fixed: list[int], autos: list[list[int]]) -> bool:
    """Some recorded automorphism fixing ``fixed`` pointwise maps ``v`` into
    the orbit closure of ``tried``."""
    usable = [a for a in autos if all(a[f] == f for f in fixed)]
    if not usable:
        return False
    orbit = {v}
    frontier = [v]
    tried_set = set(tried)
    while frontier:
        x = frontier.pop()
        for a in usable:
            y = a[x]
            if y in tried_set:
                return True
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return False


def canonical_graph(G: Graph) -> Graph:
    order = canonical_labeling(G)
    perm = [0] * G.n
    for k, v in enumerate(order):
        perm[v] = k
    return G.relabel(perm)


def canonical_form(G: Graph) -> CanonicalForm:
    """graph6 bytes of the canonically relabelled graph.

    Equal forms iff isomorphic graphs; byte order agrees with the order of
    the canonical upper-triangle bit strings for a fixed ``n``.
    """
    return encode(canonical_graph(G)).encode("ascii")


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    if G1.n != G2.n or G1.num_edges != G2.num_edges:
        return False
    if sorted(G1.degrees()) != sorted(G2.degrees()):
        return False
    return canonical_form(G1) == canonical_form(G2)
