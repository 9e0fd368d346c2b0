"""Exact real-root counting and isolation for integer polynomials.

Counting uses Sturm chains built from sign-corrected primitive
pseudo-remainders, so no rational arithmetic is needed and every chain
element is a positive multiple of the classical Sturm remainder.  Endpoints
are rationals (``Fraction``); ``None`` stands for an infinite endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .poly import (
    IntPoly,
    Number,
    poly_gcd,
    rational_roots,
    root_bound,
    squarefree_decomposition,
    squarefree_part,
)

DEFAULT_WIDTH = Fraction(1, 2 ** 20)


class RefinementBudgetExceeded(RuntimeError):
    """Two isolated roots could not be separated within the step budget."""


class SturmChain:
    """Sturm sequence of a squarefree polynomial."""

    def __init__(self, f: IntPoly):
        if not f:
            raise ValueError("Sturm chain of the zero polynomial")
        f = f.primitive()
        chain = [f]
        if f.degree > 0:
            chain.append(f.derivative().primitive())
        while chain[-1].degree > 0:
            a, b = chain[-2], chain[-1]
            r = a.prem(b)
            if not r:
                break
            e = a.degree - b.degree + 1
            if b.lc < 0 and e % 2:
                r = -r
            # the chain continues with -rem(a, b), up to a positive factor
            r = -r
            c = r.content()
            chain.append(IntPoly(x // c for x in r.coeffs))
        self.poly = f
        self.chain = chain

    def variations(self, x: Optional[Number], side: int = 1) -> int:
        """Sign variations at ``x``; ``x=None`` means +inf (side=1) or -inf (side=-1)."""
        if x is None:
            signs = [
                (1 if p.lc > 0 else -1) * (1 if side > 0 or p.degree % 2 == 0 else -1)
                for p in self.chain
            ]
        else:
            signs = [p.sign_at(x) for p in self.chain]
        v = 0
        last = 0
        for s in signs:
            if s:
                if last and s != last:
                    v += 1
                last = s
        return v

    def count(self, a: Optional[Number], b: Optional[Number],
              include_a: bool = True, include_b: bool = True) -> int:
        """Distinct roots in the interval from ``a`` to ``b``.

        ``V(a) - V(b)`` counts the roots in ``(a, b]``; endpoint roots are
        then added or removed by exact evaluation.
        """
        if a is not None and b is not None:
            a, b = Fraction(a), Fraction(b)
            if a > b:
                raise ValueError(f"empty interval: {a} > {b}")
            if a == b:
                return int(include_a and include_b and self.poly.sign_at(a) == 0)
        va = self.variations(a, side=-1)
        vb = self.variations(b, side=1)
        n = va - vb
        if a is not None and include_a and self.poly.sign_at(a) == 0:
            n += 1
        if b is not None and not include_b and self.poly.sign_at(b) == 0:
            n -= 1
        return n


@lru_cache(maxsize=8192)
def sturm_chain(f: IntPoly) -> SturmChain:
    return SturmChain(f)


@lru_cache(maxsize=8192)
def _decomposition(p: IntPoly) -> tuple[tuple[IntPoly, int], ...]:
    return tuple(squarefree_decomposition(p))


def sturm_count(p: IntPoly, a: Optional[Number], b: Optional[Number],
                include_a: bool = True, include_b: bool = True) -> int:
    """Number of distinct real roots of ``p`` in the interval."""
    if not p:
        raise ValueError("root count of the zero polynomial")
    if p.degree <= 0:
        return 0
    return sturm_chain(squarefree_part(p)).count(a, b, include_a, include_b)


def count_roots_with_multiplicity(p: IntPoly, a: Optional[Number], b: Optional[Number],
                                  include_a: bool = True, include_b: bool = True) -> int:
    """Real roots of ``p`` in the interval, counted with multiplicity."""
    if not p:
        raise ValueError("root count of the zero polynomial")
    return sum(
        m * sturm_chain(f).count(a, b, include_a, include_b)
        for f, m in _decomposition(p)
    )


# isolation -------------------------------------------------------------------


@dataclass(frozen=True)
class RootEntry:
    """One distinct real root: exact (``lo == hi``) or inside the open ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    poly: IntPoly = field(repr=False, compare=False)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("root is irrational; only an isolating interval is known")
        return self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def bisect(self) -> RootEntry:
        """Halve the isolating interval (no-op for exact roots)."""
        if self.exact:
            return self
        mid = (self.lo + self.hi) / 2
        f = self.poly
        # defining factor has no rational roots, so mid is never a root
        if f.sign_at(self.lo) * f.sign_at(mid) < 0:
            return RootEntry(self.lo, mid, self.multiplicity, f)
        return RootEntry(mid, self.hi, self.multiplicity, f)

    def refine(self, width: Fraction) -> RootEntry:
        e = self
        while not e.exact and e.hi - e.lo > width:
            e = e.bisect()
        return e

    def __float__(self) -> float:
        return float(self.midpoint())

    def as_dict(self) -> dict:
        if self.exact:
            return {"value": str(self.lo), "multiplicity": self.multiplicity}
        return {"interval": [str(self.lo), str(self.hi)], "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class RootSummary:
    """Sorted, pairwise disjoint real roots of a polynomial with multiplicities."""

    entries: tuple[RootEntry, ...]

    def __iter__(self) -> Iterator[RootEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def refine(self, width: Fraction) -> RootSummary:
        """Narrow every interval to ``width``; count and order never change."""
        return RootSummary(tuple(e.refine(width) for e in self.entries))

    def descending(self) -> list[RootEntry]:
        """Roots repeated by multiplicity, largest first (``λ_1, λ_2, ...``)."""
        out = []
        for e in reversed(self.entries):
            out.extend([e] * e.multiplicity)
        return out

    def as_list(self) -> list[dict]:
        return [e.as_dict() for e in self.entries]


def _isolate_irrational(g: IntPoly, mult: int, width: Fraction) -> list[RootEntry]:
    if g.degree <= 0:
        return []
    chain = sturm_chain(g)
    B = Fraction(root_bound(g))
    out = []
    stack = [(-B, B, chain.variations(-B) - chain.variations(B))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append(RootEntry(lo, hi, mult, chain.poly).refine(width))
            continue
        mid = (lo + hi) / 2
        vm = chain.variations(mid)
        stack.append((lo, mid, chain.variations(lo) - vm))
        stack.append((mid, hi, vm - chain.variations(hi)))
    return out


def _separate(a: RootEntry, b: RootEntry, budget: int = 10_000) -> tuple[RootEntry, RootEntry]:
    """Refine two distinct roots until their intervals are disjoint."""
    steps = 0
    while not (a.hi <= b.lo or b.hi <= a.lo) or (a.exact and b.exact and a.lo == b.lo):
        if a.exact and b.exact:
            break
        if steps > budget:
            raise RefinementBudgetExceeded(f"could not separate {a} and {b}")
        if not a.exact and (b.exact or a.hi - a.lo >= b.hi - b.lo):
            a = a.bisect()
        else:
            b = b.bisect()
        steps += 1
    return a, b


def _overlap(a: RootEntry, b: RootEntry) -> bool:
    if a.exact and b.exact:
        return a.lo == b.lo
    if a.exact:
        return b.lo < a.lo < b.hi
    if b.exact:
        return a.lo < b.lo < a.hi
    return a.lo < b.hi and b.lo < a.hi


def isolate_roots(p: IntPoly, width: Number = DEFAULT_WIDTH) -> RootSummary:
    """All real roots of ``p``: rationals exactly, the rest in disjoint open
    intervals no wider than ``width``, sorted ascending."""
    if not p:
        raise ValueError("roots of the zero polynomial")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("isolation width must be positive")
    entries: list[RootEntry] = []
    for f, m in _decomposition(p):
        g = f
        for r in rational_roots(f):
            lin = IntPoly.linear_root(r)
            entries.append(RootEntry(r, r, m, lin))
            g = g.exact_divide(lin)
        entries.extend(_isolate_irrational(g.primitive(), m, width))
    # roots of different squarefree factors are distinct; make intervals disjoint
    changed = True
    while changed:
        changed = False
        entries.sort(key=lambda e: (e.lo, e.hi))
        for i in range(len(entries) - 1):
            a, b = entries[i], entries[i + 1]
            if _overlap(a, b):
                entries[i], entries[i + 1] = _separate(a, b)
                changed = True
    for i in range(len(entries) - 1):
        a, b = entries[i], entries[i + 1]
        if _overlap(a, b):
            raise AssertionError("isolating intervals overlap after separation")
    return RootSummary(tuple(entries))


def compare_roots(a: RootEntry, b: RootEntry, budget: int = 10_000) -> int:
    """Exact comparison of two isolated real roots: -1, 0 or 1.

    Equal irrational roots are certified through the gcd of the defining
    polynomials; otherwise the intervals are refined until disjoint.
    """
    if a.exact and b.exact:
        return (a.lo > b.lo) - (a.lo < b.lo)
    if not _overlap(a, b):
        return -1 if a.hi <= b.lo else 1
    if not a.exact and not b.exact:
        g = poly_gcd(a.poly, b.poly)
        if g.degree > 0:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if sturm_chain(g).count(lo, hi, False, False) > 0:
                return 0
    a, b = _separate(a, b, budget)
    return -1 if a.hi <= b.lo else 1
