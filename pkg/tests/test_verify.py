from __future__ import annotations

import pytest

from lapspec import verify as V
from lapspec.canon import canonical_form
from lapspec.enumeration import ResourceCapError
from lapspec.families import Variant, binary_star, complete, cycle, k1_join_family, path, star
from lapspec.graph import nabla_chain
from lapspec.spectral import m_count, spanning_tree_count


def test_lower_bound_counts_and_equality_cases():
    r = V.verify_lower_bound(6)
    assert r.passed and r.graphs_examined == 2 + 6 + 21 + 112
    for n in range(2, 9):
        assert m_count(star(n), 0, 1) == n - 1
        assert m_count(complete(n), 0, n - 1) == 1


def test_lower_bound_sharded_same_report():
    a = V.verify_lower_bound(6, jobs=1).as_dict()
    b = V.verify_lower_bound(6, jobs=3).as_dict()
    a["stats"].pop("elapsed_ms")
    b["stats"].pop("elapsed_ms")
    assert a == b


def test_caps():
    with pytest.raises(ResourceCapError):
        V.verify_lower_bound(10)
    with pytest.raises(ResourceCapError):
        V.dls_check(10)
    with pytest.raises(ResourceCapError):
        V.verify_spanning_trees(17)


def test_alpha2_examples():
    E = V.equality_set_alpha2(5)
    F = {canonical_form(k1_join_family(5, m)) for m in range(2, 5)}
    assert set(E) == F
    diamond = nabla_chain([complete(1), complete(2), complete(1)])
    assert canonical_form(diamond) in V.equality_set_alpha2(4)
    assert canonical_form(cycle(5)) not in E
    assert V.classify_equality_alpha2(5).passed


def test_alpha_n_minus_2_examples():
    E5 = V.equality_set_alpha_n_minus_2(5)
    assert canonical_form(path(5)) in E5
    assert m_count(path(5), 0, 2) == 3
    E4 = V.equality_set_alpha_n_minus_2(4)
    assert canonical_form(path(4)) not in E4
    assert canonical_form(binary_star(Variant.BPrime, 1, 0, 1)) not in V.alpha_n_minus_2_families(4)
    assert V.classify_equality_alpha_n_minus_2(6).passed


def test_brackets_examples():
    from fractions import Fraction

    from lapspec.spectral import binary_star_prime_quartic, binary_star_quartic, double_star_cubic

    f = binary_star_quartic(2, 1, 1)
    assert f(0) == 6 and f(2) == 2
    assert binary_star_prime_quartic(2, 3, 1)(Fraction(1)) == -2
    assert double_star_cubic(3, 2)(Fraction(5)) == -2
    for args in [(2, 1, 1, "B"), (2, 3, 1, "B'"), (3, 0, 2, "B'"), (0, 3, 0, "B"), (4, 2, 0, "B'")]:
        assert V.verify_eigenvalue_brackets(*args).passed
    with pytest.raises(ValueError):
        V.verify_eigenvalue_brackets(1, 2, 3, "B")
    with pytest.raises(ValueError):
        V.verify_eigenvalue_brackets(1, 0, 1, "B'")


def test_bracket_failures_detect_wrong_claims():
    # q=1 has no eigenvalue 2 factor: lambda_3(P5) < 2, so a q>=2-style claim would fail
    from lapspec.spectral import Order, lambda_k_vs

    assert lambda_k_vs(path(5), 3, 2) is Order.LESS
    assert V.bracket_failures(V.BinaryStarParams(Variant.B, 1, 1, 1)) == []


def test_spanning_tree_examples():
    assert spanning_tree_count(binary_star(Variant.B, 0, 2, 0)) == 4
    assert spanning_tree_count(binary_star(Variant.BPrime, 1, 2, 1)) == 8
    assert spanning_tree_count(binary_star(Variant.B, 1, 1, 1)) == 1
    assert V.verify_spanning_trees(10, enumerate_max_n=5).passed


def test_algebraic_connectivity_examples():
    r = V.verify_algebraic_connectivity_corollary(8)
    assert r.passed and r.graphs_examined > 0


def test_property_suites_small():
    assert V.verify_multiplicity_lemmas(5, 50, seed=1).passed
    assert V.verify_interlacing(40, seed=2).passed
    assert V.verify_complement_identity(5).passed
    assert V.verify_degree_eigenvalue_bounds(6).passed
    assert V.verify_charpoly_methods(5).passed


def test_interlacing_small_cases():
    assert V.interlacing_failures(cycle(4), (0, 1)) == []
    assert V.interlacing_failures(complete(2), (0, 1)) == []


def test_cospectral_invariants_finds_pair():
    r = V.verify_cospectral_invariants(6)
    assert r.passed
    assert any("cospectral class" in line for line in r.info)


def test_degree_sequences():
    assert V.feasible_degree_sequences(6, 1, 2, "B") == [(3, 3, 2, 2, 1, 1)]
    assert V.feasible_degree_sequences(6, 0, 4, "B") == [(4, 4, 2, 2, 2, 2), (4, 3, 3, 3, 2, 1)]
    assert V.feasible_degree_sequences(7, 0, 5, "B") == [(5, 5, 2, 2, 2, 2, 2), (5, 4, 3, 3, 3, 1, 1)]
    with pytest.raises(ValueError):
        V.feasible_degree_sequences(7, 1, 2, "B")
    assert V.verify_degree_sequences(12).passed


def test_dls_small():
    r = V.dls_check(7)
    assert r.passed
    assert any("component count" in line for line in r.info)


def test_candidate_tree_counts():
    for p in range(1, 4):
        for q in range(2, 7):
            c = V.s_minus_two_candidates(p, q)
            tri, sq = spanning_tree_count(c["triangle"]), spanning_tree_count(c["square"])
            assert tri * 2 ** 3 == 2 ** q * 3 * q
            assert sq * 2 ** 3 == 2 ** q * (3 * q + 2)
            assert tri != 2 ** (q - 1) * q
            # the square candidate ties on tree count only at q = 2
            assert (sq == 2 ** (q - 1) * q) == (q == 2)
            G = V.s_minus_one_candidate(p, q)
            assert spanning_tree_count(G) == 2 ** (q - 2) * (q + 1) if q >= 2 else True


def test_square_candidate_q2_eigenvalue_one():
    from lapspec.poly import multiplicity_at
    from lapspec.spectral import charpoly

    for p in range(1, 6):
        sq = V.s_minus_two_candidates(p, 2)["square"]
        B = binary_star(Variant.B, p, 2, p)
        assert multiplicity_at(charpoly(sq), 1) == 2 * p - 1
        assert multiplicity_at(charpoly(B), 1) == 2 * p - 2


def test_reports_deterministic():
    a = V.verify_interlacing(30, seed=5).as_dict()
    b = V.verify_interlacing(30, seed=5).as_dict()
    a["stats"].pop("elapsed_ms")
    b["stats"].pop("elapsed_ms")
    assert a == b
