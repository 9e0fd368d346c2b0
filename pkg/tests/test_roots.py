from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from lapspec.enumeration import graphs
from lapspec.families import Variant, binary_star, cycle
from lapspec.poly import X, IntPoly, eval_at
from lapspec.roots import (
    compare_roots,
    count_roots_with_multiplicity,
    isolate_roots,
    sturm_count,
)
from lapspec.spectral import charpoly

from conftest import graphs_st

P5 = X * (X ** 4 - 8 * X ** 3 + 21 * X ** 2 - 20 * X + 5)
fracs = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 4))


def test_sturm_examples():
    p = X * (X - 2) * (X - 4)
    assert sturm_count(p, 0, 2) == 2
    assert sturm_count(p, 0, 2, include_a=False) == 1
    assert sturm_count(p, 0, 2, include_b=False) == 1
    assert sturm_count(p, Fraction(1, 2), Fraction(3, 2)) == 0
    assert sturm_count(p, None, None) == 3
    quartic = X ** 4 - 8 * X ** 3 + 21 * X ** 2 - 20 * X + 5
    for a in range(4):
        assert sturm_count(quartic, a, a + 1, False, False) == 1


def test_multiplicity_counts():
    C4 = charpoly(cycle(4))
    assert C4 == X * (X - 2) ** 2 * (X - 4)
    assert count_roots_with_multiplicity(C4, 0, 2) == 3
    assert count_roots_with_multiplicity(C4, 0, 0) == 1
    B = charpoly(binary_star(Variant.B, 2, 2, 2))
    assert count_roots_with_multiplicity(B, 1, 1) == 2


@given(st.lists(st.integers(-3, 6), min_size=1, max_size=6), fracs, fracs, fracs)
def test_additivity(roots, a, b, c):
    a, b, c = sorted((a, b, c))
    p = IntPoly.from_roots(roots) * (X ** 2 - 2)
    for f in (sturm_count, count_roots_with_multiplicity):
        assert f(p, a, c) == f(p, a, b) + f(p, b, c, include_a=False)
        assert f(p, a, c, include_a=False) == f(p, a, b, include_a=False) + f(p, b, c, include_a=False)


def test_isolation_examples():
    s = isolate_roots(X * (X - 1) * (X - 3))
    assert [e.value for e in s] == [0, 1, 3]
    s = isolate_roots(P5)
    assert len(s) == 5
    lam = s.descending()
    assert 3 < lam[0].lo and lam[0].hi < 4
    assert 2 < lam[1].lo and lam[1].hi < 3
    assert all(e.hi - e.lo <= Fraction(1, 2 ** 20) for e in s)


def test_refinement_stable():
    s = isolate_roots(P5 * (X ** 2 - 3) ** 2, width=1)
    fine = s.refine(Fraction(1, 10 ** 9))
    assert len(fine) == len(s)
    assert [e.multiplicity for e in fine] == [e.multiplicity for e in s]
    for a, b in zip(s, fine):
        assert a.lo <= b.lo and b.hi <= a.hi
    for a, b in zip(fine, list(fine)[1:]):
        assert a.hi <= b.lo


def test_laplacian_totals_enumerated():
    for n in range(1, 8):
        for G in graphs(n):
            s = isolate_roots(charpoly(G), width=1)
            assert s.total_multiplicity == n
            for e in s:
                if e.exact:
                    assert eval_at(charpoly(G), e.value) == 0


@given(graphs_st(max_n=7))
def test_isolation_matches_float(G):
    s = isolate_roots(charpoly(G))
    L = np.diag(G.degrees()) - np.array([[1 if G.has_edge(i, j) else 0 for j in range(G.n)]
                                         for i in range(G.n)])
    ev = sorted(np.linalg.eigvalsh(L.astype(float)), reverse=True)
    for e, x in zip(s.descending(), ev):
        assert float(e.lo) - 1e-6 <= x <= float(e.hi) + 1e-6


def test_compare_roots():
    r2 = isolate_roots(X ** 2 - 2).descending()[0]
    r2b = isolate_roots((X ** 2 - 2) * (X - 5)).descending()[1]
    assert compare_roots(r2, r2b) == 0
    three = isolate_roots(X - 3).descending()[0]
    assert compare_roots(r2, three) == -1
    assert compare_roots(three, r2) == 1
    near = isolate_roots(1000000 * X ** 2 - 2000001).descending()[0]
    assert compare_roots(r2, near) == -1


def test_compare_roots_random_against_float():
    rng = random.Random(3)
    for _ in range(200):
        p = IntPoly([rng.randint(-9, 9) for _ in range(4)] + [1])
        q = IntPoly([rng.randint(-9, 9) for _ in range(3)] + [1])
        rp, rq = isolate_roots(p).descending(), isolate_roots(q).descending()
        for a in rp:
            for b in rq:
                c = compare_roots(a, b)
                fa, fb = float(a.refine(Fraction(1, 10 ** 12)).lo), float(b.refine(Fraction(1, 10 ** 12)).lo)
                if abs(fa - fb) > 1e-9:
                    assert c == (1 if fa > fb else -1)
