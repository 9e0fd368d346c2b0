"""Constructors for the graph families used throughout the package.

Vertex numbering is fixed so that Laplacian matrices are reproducible:

* ``star(n)``: center is vertex 0.
* ``path(n)``: ``0 - 1 - ... - n-1``; ``cycle(n)`` adds ``{n-1, 0}``.
* ``complete_multipartite(parts)``: consecutive blocks in the given order.
* ``binary_star``: ``u_1..u_p, w_1..w_q, v_1..v_r, u, v``.  The ``u_i`` are
  pendants at ``u``, the ``v_i`` pendants at ``v``, and each ``w_i`` is
  adjacent to exactly ``u`` and ``v``.  The primed variant adds ``uv``.
* ``double_star(p, r)``: same numbering as ``binary_star(BPrime, p, 0, r)``.
* ``double_starlike(p, n, q)``: path vertices ``0..n-1`` first, then the
  ``p`` pendants at vertex 0, then the ``q`` pendants at vertex ``n-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, check_order, empty, nabla_chain


class Variant(enum.Enum):
    B = "B"
    BPrime = "BPrime"

    @classmethod
    def parse(cls, text: str | Variant) -> Variant:
        if isinstance(text, Variant):
            return text
        key = text.strip().replace("'", "Prime").replace("′", "Prime")
        for v in cls:
            if key.lower() == v.value.lower():
                return v
        raise ValueError(f"unknown binary star variant {text!r}")


@dataclass(frozen=True)
class BinaryStarParams:
    variant: Variant
    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        if min(self.p, self.q, self.r) < 0:
            raise GraphError("p, q, r must be nonnegative")
        check_order(self.order)
        if self.variant is Variant.B and self.q < 1:
            raise GraphError("B(p, 0, r) is disconnected; need q >= 1")

    @property
    def order(self) -> int:
        return self.p + self.q + self.r + 2

    def normalized(self) -> BinaryStarParams:
        """Same graph with the larger pendant bundle first (p >= r)."""
        if self.p >= self.r:
            return self
        return BinaryStarParams(self.variant, self.r, self.q, self.p)

    def __str__(self) -> str:
        name = "B" if self.variant is Variant.B else "B'"
        return f"{name}({self.p},{self.q},{self.r})"


def complete(n: int) -> Graph:
    check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``S_n``: vertex 0 adjacent to all others."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or min(parts) < 1:
        raise GraphError("part sizes must be positive")
    n = sum(parts)
    edges = []
    block = []
    start = 0
    for size in parts:
        block.append(range(start, start + size))
        start += size
    for a in range(len(block)):
        for b in range(a + 1, len(block)):
            edges.extend((i, j) for i in block[a] for j in block[b])
    return Graph.from_edges(n, edges)


def binary_star(params: BinaryStarParams | Variant | str, p: int | None = None,
                q: int | None = None, r: int | None = None) -> Graph:
    """``B(p,q,r)`` or ``B'(p,q,r)``.

    Accepts either a :class:`BinaryStarParams` or ``(variant, p, q, r)``.
    """
    if not isinstance(params, BinaryStarParams):
        params = BinaryStarParams(Variant.parse(params), p, q, r)
    p, q, r = params.p, params.q, params.r
    n = params.order
    u, v = n - 2, n - 1
    edges = [(i, u) for i in range(p)]
    edges += [(p + i, u) for i in range(q)] + [(p + i, v) for i in range(q)]
    edges += [(p + q + i, v) for i in range(r)]
    if params.variant is Variant.BPrime:
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def double_star(p: int, r: int) -> Graph:
    """``S(p, r)``: adjacent centers carrying ``p`` and ``r`` pendants."""
    return binary_star(Variant.BPrime, p, 0, r)


def double_starlike(p: int, n: int, q: int) -> Graph:
    """``H(p, n, q)``: ``P_n`` with ``p`` and ``q`` pendants at its two ends."""
    if n < 2 or p < 1 or q < 1:
        raise GraphError("double starlike tree needs n >= 2 and p, q >= 1")
    total = p + n + q
    check_order(total)
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(0, n + i) for i in range(p)]
    edges += [(n - 1, n + p + i) for i in range(q)]
    return Graph.from_edges(total, edges)


def k1_join_family(n: int, m: int) -> Graph:
    """``K_1 ∇ K_{n-m} ∇ K_{m-1}`` for ``2 <= m <= n-1``."""
    if not 2 <= m <= n - 1:
        raise GraphError(f"need 2 <= m <= n-1, got n={n}, m={m}")
    return nabla_chain([complete(1), complete(n - m), complete(m - 1)])


def binary_star_params(n: int, variant: Variant | str | None = None,
                       *, p_ge_r: bool = True) -> list[BinaryStarParams]:
    """All valid binary star parameter triples of order ``n``."""
    variants = [Variant.parse(variant)] if variant is not None else list(Variant)
    out = []
    for var in variants:
        for q in range(0, n - 1):
            for p in range(0, n - 1 - q):
                r = n - 2 - p - q
                if p_ge_r and p < r:
                    continue
                if var is Variant.B and q == 0:
                    continue
                out.append(BinaryStarParams(var, p, q, r))
    return out


__all__ = [
    "BinaryStarParams", "Variant", "binary_star", "binary_star_params", "complete",
    "complete_multipartite", "cycle", "double_star", "double_starlike", "empty",
    "k1_join_family", "path", "star",
]
