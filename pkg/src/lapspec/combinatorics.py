"""Graph parameters that pair with the spectral side: independence number,
star degree and degree-2 common-neighbourhood classes."""

from __future__ import annotations

from collections import defaultdict

from .graph import Graph, bits, complement


def _color_order(P: int, adj: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Greedy colouring of the candidate set ``P``; returns vertices and
    their colour numbers, colour classes in increasing order."""
    order, bounds = [], []
    U = P
    k = 0
    while U:
        k += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            U &= ~low
            Q &= ~adj[v] & ~low
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(G: Graph) -> list[int]:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    adj = G.adj
    best: list[int] = []

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        order, bounds = _color_order(P, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + bounds[idx] <= len(best):
                return
            v = order[idx]
            R.append(v)
            nP = P & adj[v]
            if nP:
                expand(R, nP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << G.n) - 1)
    return sorted(best)


def max_independent_set(G: Graph) -> list[int]:
    """A maximum independent set, as a sorted vertex list."""
    S = max_clique(complement(G))
    mask = sum(1 << v for v in S)
    for v in S:
        if G.adj[v] & mask:
            raise AssertionError("branch and bound returned a dependent set")
    return S


def independence_number(G: Graph) -> int:
    return len(max_independent_set(G))


def independence_number_brute(G: Graph) -> int:
    """Exhaustive maximum over all vertex subsets (small graphs only)."""
    best = 0
    for S in range(1 << G.n):
        k = S.bit_count()
        if k <= best:
            continue
        if all(not (G.adj[v] & S) for v in bits(S)):
            best = k
    return best


def star_degree(G: Graph) -> int:
    """Sum over pendant-star centres of (number of pendant neighbours - 1).

    In a ``K_2`` component each endpoint sees one pendant neighbour, so the
    component contributes 0 whichever endpoint is taken as the centre.
    """
    pendants = 0
    for v, row in enumerate(G.adj):
        if row.bit_count() == 1:
            pendants |= 1 << v
    total = 0
    for row in G.adj:
        k = (row & pendants).bit_count()
        if k:
            total += k - 1
    return total


def common_neighborhood_set(G: Graph, u: int, v: int) -> list[int]:
    """Vertices whose neighbourhood is exactly ``{u, v}``."""
    if u == v:
        raise ValueError("u and v must be distinct")
    target = 1 << u | 1 << v
    return [w for w, row in enumerate(G.adj) if row == target]


def all_deg2_sets(G: Graph) -> list[tuple[tuple[int, int], list[int]]]:
    """Nonempty classes ``{w : N(w) = {u, v}}`` keyed by the pair ``(u, v)``."""
    groups: dict[int, list[int]] = defaultdict(list)
    for w, row in enumerate(G.adj):
        if row.bit_count() == 2:
            groups[row].append(w)
    out = []
    for row, ws in groups.items():
        u, v = bits(row)
        out.append(((u, v), ws))
    return sorted(out)


def deg2_multiplicity_bound(G: Graph) -> int:
    """Sum of ``|N_uv| - 1`` over pairs whose class is nonempty."""
    return sum(len(ws) - 1 for _, ws in all_deg2_sets(G))

