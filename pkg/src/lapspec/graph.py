"""Simple undirected graphs stored as adjacency bit-rows.

A :class:`Graph` on ``n`` vertices keeps one integer per vertex; bit ``j`` of
row ``i`` is set iff ``{i, j}`` is an edge.  Graphs are immutable: every
operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph construction or vertex index."""


class OrderCapError(GraphError):
    """Requested order exceeds ``MAX_ORDER``."""


def check_order(n: int, what: str = "order") -> None:
    if n > MAX_ORDER:
        raise OrderCapError(f"{what} {n} exceeds {MAX_ORDER}")
    if n < 1:
        raise GraphError(f"{what} must be at least 1, got {n}")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.n)
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            j = row
            while j:
                low = j & -j
                k = low.bit_length() - 1
                if not self.adj[k] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {k}")
                j ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        check_order(n)
        rows = [0] * n
        for i, j in edges:
            _check_pair(n, i, j)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            nv = perm[v]
            for w in bits(row):
                rows[nv] |= 1 << perm[w]
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: k for k, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(index[i], index[j]) for i, j in self.edges() if i in index and j in index],
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_pair(n: int, i: int, j: int) -> None:
    if not (0 <= i < n and 0 <= j < n):
        raise GraphError(f"vertex index out of range for order {n}: ({i}, {j})")
    if i == j:
        raise GraphError(f"loops are not allowed: ({i}, {j})")


def empty(n: int) -> Graph:
    """``n`` isolated vertices."""
    check_order(n)
    return Graph(n, (0,) * n)


def add_edge(G: Graph, i: int, j: int, *, report: bool = False):
    """Return ``G + ij``.

    With ``report=True`` the result is ``(graph, changed)`` where ``changed``
    is False when the edge was already present.
    """
    _check_pair(G.n, i, j)
    changed = not G.has_edge(i, j)
    rows = list(G.adj)
    rows[i] |= 1 << j
    rows[j] |= 1 << i
    H = Graph(G.n, tuple(rows))
    return (H, changed) if report else H


def delete_edge(G: Graph, i: int, j: int, *, report: bool = False):
    """Return ``G - ij``; deleting a non-edge leaves the graph unchanged.

    With ``report=True`` the result is ``(graph, changed)``.
    """
    _check_pair(G.n, i, j)
    changed = G.has_edge(i, j)
    rows = list(G.adj)
    rows[i] &= ~(1 << j)
    rows[j] &= ~(1 << i)
    H = Graph(G.n, tuple(rows))
    return (H, changed) if report else H


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.adj)))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    return nabla_chain([G1, G2], join_blocks=False)


def join(G1: Graph, G2: Graph) -> Graph:
    return nabla_chain([G1, G2])


def nabla_chain(parts: Sequence[Graph | None], *, join_blocks: bool = True) -> Graph:
    """Concatenate vertex blocks and join consecutive nonempty blocks.

    ``None`` stands for an order-0 block.  It contributes no vertices and
    breaks the chain: its neighbours are not joined to each other.
    """
    total = sum(P.n for P in parts if P is not None)
    check_order(total, "combined order")
    rows = [0] * total
    offset = 0
    prev_mask = 0
    for P in parts:
        if P is None:
            prev_mask = 0
            continue
        mask = ((1 << P.n) - 1) << offset
        for v, row in enumerate(P.adj):
            rows[offset + v] = row << offset
        if join_blocks and prev_mask:
            for v in bits(mask):
                rows[v] |= prev_mask
            for v in bits(prev_mask):
                rows[v] |= mask
        prev_mask = mask
        offset += P.n
    return Graph(total, tuple(rows))


def degree_sequence(G: Graph) -> tuple[int, ...]:
    """Degrees sorted in nonincreasing order."""
    return tuple(sorted(G.degrees(), reverse=True))


def components(G: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    out = []
    seen = 0
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(G: Graph) -> bool:
    reach = frontier = 1
    full = (1 << G.n) - 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach == full


def iter_vertex_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
