"""Named checks, one per claim about Laplacian eigenvalue distribution,
binary star graphs and their spectral characterisation.

Every check returns a :class:`~lapspec.report.Report`.  Checks never stop at
the first failure; counterexamples are collected (up to ``cap``) as graph6
strings with a diagnostic.  Graph sweeps can be sharded over processes with
``jobs``; merging is order-insensitive so the result does not depend on it.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import graph6
from .canon import canonical_form
from .combinatorics import (
    all_deg2_sets,
    deg2_multiplicity_bound,
    independence_number,
    star_degree,
)
from .enumeration import ResourceCapError, graphs, stream_partition
from .families import (
    BinaryStarParams,
    Variant,
    binary_star,
    binary_star_params,
    k1_join_family,
)
from .graph import Graph, components, degree_sequence, delete_edge, join
from .poly import IntPoly, multiplicity_at
from .report import DEFAULT_CAP, Counterexample, Report
from .roots import RefinementBudgetExceeded, compare_roots, isolate_roots, sturm_chain
from .spectral import (
    Order,
    binary_star_prime_quartic,
    binary_star_quartic,
    charpoly,
    charpoly_bareiss,
    charpoly_binary_star,
    charpoly_binary_star_prime,
    charpoly_double_star,
    charpoly_join,
    charpoly_k1_join_family,
    complement_identity_check,
    double_star_cubic,
    lambda_k_vs,
    m_count,
    spanning_tree_count,
    spanning_tree_count_det,
)

MAX_SWEEP_ORDER = 9
MAX_FAMILY_ORDER = 16


def _g6(G: Graph) -> str:
    return graph6.encode(G)


def _cap_order(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise ResourceCapError(f"{what} must be at most {limit}, got {value}")


def _run_shard(args: tuple[Callable[[Graph], Optional[str]], list[Graph]]) -> tuple[int, list[Counterexample]]:
    fn, shard = args
    out = []
    for G in shard:
        detail = fn(G)
        if detail is not None:
            out.append(Counterexample(_g6(G), detail))
    return len(shard), out


def _sweep(report: Report, fn: Callable[[Graph], Optional[str]], stream: Iterable[Graph],
           jobs: int = 1) -> None:
    """Apply a per-graph check to every graph in the stream."""
    if jobs <= 1:
        report.add(*reversed(_run_shard((fn, list(stream)))))
        return
    shards = stream_partition(stream, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for examined, failures in pool.map(_run_shard, [(fn, s) for s in shards]):
            report.add(failures, examined)


class _Timer:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self) -> Report:
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.elapsed_ms = int(round((time.perf_counter() - self.t0) * 1000))


def _connected_range(lo: int, hi: int) -> Iterable[Graph]:
    for n in range(lo, hi + 1):
        yield from graphs(n, connected_only=True)


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)


# lower bound --------------------------------------------------------------------


def _lower_bound_violation(G: Graph) -> Optional[str]:
    a = independence_number(G)
    m = m_count(G, 0, G.n - a)
    if a > m:
        return f"alpha={a} > m[0,{G.n - a}]={m}"
    return None


def verify_lower_bound(max_n: int = 7, *, min_n: int = 3, jobs: int = 1,
                       cap: int = DEFAULT_CAP) -> Report:
    """``α(G) <= m_G[0, n - α(G)]`` for every connected graph of order ``min_n..max_n``."""
    _cap_order(max_n, MAX_SWEEP_ORDER, "max_n")
    report = Report("lower-bound", {"min_n": min_n, "max_n": max_n}, cap=cap)
    with _Timer(report):
        _sweep(report, _lower_bound_violation, _connected_range(min_n, max_n), jobs)
    return report


# alpha = 2 ----------------------------------------------------------------------


def _set_equality(report: Report, found: dict[bytes, Graph], expected: dict[bytes, Graph],
                  missing_label: str, extra_label: str) -> None:
    failures = []
    for form in sorted(set(found) - set(expected)):
        failures.append(Counterexample(form.decode(), extra_label))
    for form in sorted(set(expected) - set(found)):
        failures.append(Counterexample(form.decode(), missing_label))
    report.add(failures)


def equality_set_alpha2(n: int) -> dict[bytes, Graph]:
    """Connected order-``n`` graphs with ``α = 2`` and ``m_G[0, n-2] = 2``."""
    out = {}
    for G in graphs(n, connected_only=True):
        if independence_number(G) == 2 and m_count(G, 0, n - 2) == 2:
            out[canonical_form(G)] = G
    return out


def classify_equality_alpha2(n: int, *, cap: int = DEFAULT_CAP) -> Report:
    """The ``α = 2`` equality graphs are exactly ``K_1 ∇ K_{n-m} ∇ K_{m-1}``, ``2 <= m <= n-1``."""
    if n < 4:
        raise ValueError("classification sweep needs n >= 4")
    _cap_order(n, MAX_SWEEP_ORDER, "n")
    report = Report("alpha2", {"n": n}, cap=cap)
    with _Timer(report):
        found = equality_set_alpha2(n)
        expected = {canonical_form(k1_join_family(n, m)): k1_join_family(n, m) for m in range(2, n)}
        report.graphs_examined = sum(1 for _ in graphs(n, connected_only=True))
        _set_equality(report, found, expected,
                      "K1+K+K family member missing from the equality set",
                      "equality graph outside the K1+K+K family")
        report.info.append(f"equality set size {len(found)}, family classes {len(expected)}")
    return report


# alpha = n - 2 ------------------------------------------------------------------


def alpha_n_minus_2_families(n: int) -> dict[bytes, BinaryStarParams]:
    """Binary stars of order ``n`` satisfying the classification constraints."""
    out: dict[bytes, BinaryStarParams] = {}
    for P in binary_star_params(n, p_ge_r=True):
        if P.variant is Variant.B:
            ok = P.p + P.q + P.r >= 3
        elif P.q == 0:
            ok = P.p * P.r >= 2
        else:
            ok = True
        if ok:
            out.setdefault(canonical_form(binary_star(P)), P)
    return out


def equality_set_alpha_n_minus_2(n: int) -> dict[bytes, Graph]:
    out = {}
    for G in graphs(n, connected_only=True):
        if independence_number(G) == n - 2 and m_count(G, 0, 2) == n - 2:
            out[canonical_form(G)] = G
    return out


def classify_equality_alpha_n_minus_2(n: int, *, cap: int = DEFAULT_CAP) -> Report:
    """The ``α = n-2`` equality graphs are exactly the constrained binary stars."""
    if n < 4:
        raise ValueError("classification sweep needs n >= 4")
    _cap_order(n, MAX_SWEEP_ORDER, "n")
    report = Report("alpha-n-minus-2", {"n": n}, cap=cap)
    with _Timer(report):
        found = equality_set_alpha_n_minus_2(n)
        fam = alpha_n_minus_2_families(n)
        expected = {form: binary_star(P) for form, P in fam.items()}
        report.graphs_examined = sum(1 for _ in graphs(n, connected_only=True))
        _set_equality(report, found, expected,
                      "binary star family member missing from the equality set",
                      "equality graph outside the binary star families")
        names = ", ".join(str(P) for P in sorted(fam.values(), key=str))
        report.info.append(f"equality set size {len(found)}: {names}")
    return report


# eigenvalue brackets ------------------------------------------------------------


def _expect_order(G: Graph, k: int, c: int, want: Order, label: str) -> Optional[str]:
    got = lambda_k_vs(G, k, c)
    if got is not want:
        return f"{label}: lambda_{k} vs {c} is {got.value}, expected {want.value}"
    return None


def bracket_failures(P: BinaryStarParams) -> list[str]:
    """All violated bracket, sign-table and root-location claims for one binary star."""
    p, q, r = P.p, P.q, P.r
    n = P.order
    G = binary_star(P)
    fails: list[str] = []

    def check(cond: bool, msg: str) -> None:
        if not cond:
            fails.append(msg)

    def chk(msg: Optional[str]) -> None:
        if msg:
            fails.append(msg)

    above_two = m_count(G, 2, n, include_a=False)
    check(above_two == 2, f"m(2,n]={above_two}, expected 2")
    G_ = Order.GREATER, Order.LESS, Order.EQUAL
    GT, LT, EQ = G_
    if P.variant is Variant.B and p == 0:
        chk(_expect_order(G, 1, n, EQ, "B(0,q,0)"))
        chk(_expect_order(G, 2, q, EQ, "B(0,q,0)"))
    elif P.variant is Variant.B:
        lo, mid, hi = 2, p + q + 1, p + q + 2
        chk(_expect_order(G, 2, lo, GT, "bracket"))
        chk(_expect_order(G, 2, mid, LT, "bracket"))
        chk(_expect_order(G, 1, mid, GT, "bracket"))
        chk(_expect_order(G, 1, hi, LT, "bracket"))
    elif q == 0:
        chk(_expect_order(G, 2, 2, GT, "bracket"))
        chk(_expect_order(G, 2, p + 2, LT, "bracket"))
        chk(_expect_order(G, 1, p + 2, GT, "bracket"))
        chk(_expect_order(G, 1, p + 3, LT, "bracket"))
    elif r == 0:
        chk(_expect_order(G, 1, n, EQ, "B'(p,q,0)"))
        chk(_expect_order(G, 2, q + 2, EQ, "B'(p,q,0)"))
    else:
        chk(_expect_order(G, 2, 2, GT, "bracket"))
        chk(_expect_order(G, 2, p + q + 2, LT, "bracket"))
        chk(_expect_order(G, 1, p + q + 2, GT, "bracket"))
        chk(_expect_order(G, 1, p + q + 3, LT, "bracket"))
    if q >= 2:
        chk(_expect_order(G, 3, 2, EQ, "lambda_3"))

    d = p - r
    if P.variant is Variant.B and p >= 1:
        f = binary_star_quartic(p, q, r)
        table = [
            (0, q * (p + q + r + 2), 1),
            (1, -p * r, 0),
            (2, q * (p + q + r - 2), 1),
            (p + q + 1, -q * (q + d), -1),
            (p + q + 2, d ** 3 + d ** 2 * (2 * q + 2 * r + 3)
             + d * (q * q + q * (2 * r + 3) + r * r + 4 * r + 2) + r * (2 * q + r + 2), 1),
        ]
        fails += _sign_table("f", f, table)
        if r:
            cuts = [0, 1, 2, p + q + 1, p + q + 2]
            fails += _root_location("f", f, cuts)
        else:
            check(f.sign_at(1) == 0, "f(1) != 0 for r=0")
            fails += _root_location("f/(x-1)", f.exact_divide(IntPoly((-1, 1))),
                                    [0, 2, p + q + 1, p + q + 2])
    elif P.variant is Variant.BPrime and q == 0:
        g = double_star_cubic(p, r)
        table = [
            (0, -(p + r + 2), -1),
            (1, p * r, 1),
            (2, d * (2 * r - 1) + 2 * r * (r - 1), 1),
            (p + 2, -r, -1),
            (p + 3, d * d + d * (r + 4) + 4, 1),
        ]
        fails += _sign_table("g", g, table)
        fails += _root_location("g", g, [0, 2, p + 2, p + 3])
    elif P.variant is Variant.BPrime and r >= 1:
        h = binary_star_prime_quartic(p, q, r)
        table = [
            (0, (q + 2) * (p + q + r + 2), 1),
            (1, -p * r, -1),
            (2, q * (p + q + r), 1),
            (p + q + 2, -p * r, -1),
            (p + q + 3, d ** 3 + d ** 2 * (2 * q + 2 * r + 5)
             + d * (q * q + q * (2 * r + 6) + r * r + 5 * r + 8) + (q + 2) * (q + 2 * r + 2), 1),
        ]
        fails += _sign_table("h", h, table)
        fails += _root_location("h", h, [0, 1, 2, p + q + 2, p + q + 3])
    return fails


def _sign_table(name: str, f: IntPoly, table: list[tuple[int, int, int]]) -> list[str]:
    """Each row ``(x, value, sign)``: ``f(x) == value`` exactly and the value has
    the stated strict sign (``0`` means ``<= 0``)."""
    out = []
    for x, want, sign in table:
        got = f(Fraction(x))
        if got != want:
            out.append(f"{name}({x})={got}, expected {want}")
        if sign > 0 and not got > 0 or sign < 0 and not got < 0 or sign == 0 and got > 0:
            out.append(f"{name}({x})={got} has the wrong sign")
    return out


def _root_location(name: str, f: IntPoly, cuts: list[int]) -> list[str]:
    chain = sturm_chain(f)
    out = []
    for a, b in zip(cuts, cuts[1:]):
        k = chain.count(a, b, False, False)
        if k != 1:
            out.append(f"{name} has {k} roots in ({a},{b}), expected 1")
    return out


def bracket_family(P: BinaryStarParams) -> bool:
    """Parameters covered by the classification (with ``p >= r``)."""
    if P.p < P.r:
        return False
    if P.variant is Variant.B:
        return P.q >= 1 and P.p + P.q + P.r >= 3
    if P.q == 0:
        return P.p * P.r >= 2
    return True


def verify_eigenvalue_brackets(p: int, q: int, r: int, variant: Variant | str,
                               *, cap: int = DEFAULT_CAP) -> Report:
    P = BinaryStarParams(Variant.parse(variant), p, q, r)
    if not bracket_family(P):
        raise ValueError(f"{P} is outside the classified families (need p >= r and the family constraints)")
    report = Report("brackets", {"variant": P.variant.value, "p": p, "q": q, "r": r}, cap=cap)
    with _Timer(report):
        g6 = _g6(binary_star(P))
        report.add([Counterexample(g6, f"{P}: {m}") for m in bracket_failures(P)], 1)
    return report


def verify_eigenvalue_brackets_sweep(max_order: int = 14, *, cap: int = DEFAULT_CAP) -> Report:
    _cap_order(max_order, MAX_FAMILY_ORDER, "max_order")
    report = Report("brackets", {"max_order": max_order}, cap=cap)
    with _Timer(report):
        for n in range(4, max_order + 1):
            for P in binary_star_params(n):
                if bracket_family(P):
                    g6 = _g6(binary_star(P))
                    report.add([Counterexample(g6, f"{P}: {m}") for m in bracket_failures(P)], 1)
    return report


# spanning trees -----------------------------------------------------------------


def binary_star_tree_count(P: BinaryStarParams) -> int:
    """``2^(q-1) q`` for ``B`` and ``2^(q-1) q + 2^q`` for ``B'``."""
    base = P.q * 2 ** P.q // 2
    return base if P.variant is Variant.B else base + 2 ** P.q


def _tree_methods_violation(G: Graph) -> Optional[str]:
    a, b = spanning_tree_count(G), spanning_tree_count_det(G)
    if a != b:
        return f"coefficient method {a} != reduced determinant {b}"
    return None


def verify_spanning_trees(max_order: int = 16, *, enumerate_max_n: int = 7,
                          jobs: int = 1, cap: int = DEFAULT_CAP) -> Report:
    _cap_order(max_order, MAX_FAMILY_ORDER, "max_order")
    _cap_order(enumerate_max_n, MAX_SWEEP_ORDER, "enumerate_max_n")
    report = Report("spanning-trees", {"max_order": max_order, "enumerate_max_n": enumerate_max_n},
                    cap=cap)
    with _Timer(report):
        fails = []
        count = 0
        for n in range(3, max_order + 1):
            for P in binary_star_params(n, p_ge_r=False):
                G = binary_star(P)
                want = binary_star_tree_count(P)
                got = spanning_tree_count(G)
                got_det = spanning_tree_count_det(G)
                count += 1
                if got != want or got_det != want:
                    fails.append(Counterexample(_g6(G), f"{P}: t={got} (det {got_det}), formula {want}"))
        report.add(fails, count)
        all_graphs = (G for n in range(1, enumerate_max_n + 1) for G in graphs(n))
        _sweep(report, _tree_methods_violation, all_graphs, jobs)
    return report


# algebraic connectivity ---------------------------------------------------------


def verify_algebraic_connectivity_corollary(max_order: int = 16, *, cap: int = DEFAULT_CAP) -> Report:
    """``0 < λ_{n-1} < 1`` for every ``B(p,q,r)``, ``B'(p,q,r)`` with ``pr != 0``."""
    _cap_order(max_order, MAX_FAMILY_ORDER, "max_order")
    report = Report("algebraic-connectivity", {"max_order": max_order}, cap=cap)
    with _Timer(report):
        fails = []
        count = 0
        for n in range(4, max_order + 1):
            for P in binary_star_params(n, p_ge_r=False):
                if P.p * P.r == 0:
                    continue
                G = binary_star(P)
                count += 1
                if lambda_k_vs(G, n - 1, 1) is not Order.LESS:
                    fails.append(Counterexample(_g6(G), f"{P}: algebraic connectivity >= 1"))
                if lambda_k_vs(G, n - 1, 0) is not Order.GREATER:
                    fails.append(Counterexample(_g6(G), f"{P}: algebraic connectivity is 0"))
        report.add(fails, count)
    return report


# multiplicity lemmas ------------------------------------------------------------


def _multiplicity_violation(G: Graph) -> Optional[str]:
    mu = charpoly(G)
    issues = []
    s = star_degree(G)
    m1 = multiplicity_at(mu, 1)
    if m1 < s:
        issues.append(f"mult(1)={m1} < star degree {s}")
    sets = all_deg2_sets(G)
    if sets:
        m2 = multiplicity_at(mu, 2)
        for (u, v), ws in sets:
            if m2 < len(ws) - 1:
                issues.append(f"mult(2)={m2} < |N({u},{v})|-1={len(ws) - 1}")
        total = deg2_multiplicity_bound(G)
        if m2 < total:
            issues.append(f"mult(2)={m2} < summed bound {total}")
    return "; ".join(issues) or None


def verify_multiplicity_lemmas(n_exhaustive: int = 7, random_trials: int = 1000, seed: int = 0,
                               *, max_random_n: int = 12, jobs: int = 1,
                               cap: int = DEFAULT_CAP) -> Report:
    """Eigenvalue 1 multiplicity >= star degree; eigenvalue 2 multiplicity >=
    ``|N| - 1`` per degree-2 class and >= their sum."""
    _cap_order(n_exhaustive, 8, "n_exhaustive")
    report = Report("multiplicity", {"n_exhaustive": n_exhaustive, "random_trials": random_trials,
                                     "seed": seed, "max_random_n": max_random_n,
                                     "random_model": "G(n,1/2)"}, cap=cap)
    with _Timer(report):
        stream = (G for n in range(1, n_exhaustive + 1) for G in graphs(n))
        _sweep(report, _multiplicity_violation, stream, jobs)
        rng = random.Random(seed)
        rand = [_random_graph(rng, rng.randint(2, max_random_n)) for _ in range(random_trials)]
        _sweep(report, _multiplicity_violation, rand, jobs)
    return report


# interlacing --------------------------------------------------------------------


def interlacing_failures(G: Graph, e: tuple[int, int], budget: int = 10_000) -> list[str]:
    """Check ``λ_i(G-e) <= λ_i(G) <= λ_{i-1}(G-e)`` for every ``i``."""
    H = delete_edge(G, *e)
    LG = isolate_roots(charpoly(G)).descending()
    LH = isolate_roots(charpoly(H)).descending()
    out = []
    try:
        for i in range(G.n):
            if compare_roots(LH[i], LG[i], budget) > 0:
                out.append(f"lambda_{i + 1}(G-e) > lambda_{i + 1}(G)")
            if i and compare_roots(LG[i], LH[i - 1], budget) > 0:
                out.append(f"lambda_{i + 1}(G) > lambda_{i}(G-e)")
    except RefinementBudgetExceeded as exc:
        out.append(f"refinement budget exceeded: {exc}")
    return out


def _random_edge_pair(rng: random.Random, max_n: int) -> tuple[Graph, tuple[int, int]]:
    while True:
        G = _random_graph(rng, rng.randint(2, max_n))
        E = G.edges()
        if E:
            return G, E[rng.randrange(len(E))]


def verify_interlacing(random_trials: int = 500, seed: int = 0, *, max_n: int = 10,
                       cap: int = DEFAULT_CAP) -> Report:
    report = Report("interlacing", {"random_trials": random_trials, "seed": seed, "max_n": max_n,
                                    "random_model": "G(n,1/2)"}, cap=cap)
    with _Timer(report):
        rng = random.Random(seed)
        fails = []
        for _ in range(random_trials):
            G, e = _random_edge_pair(rng, max_n)
            for msg in interlacing_failures(G, e):
                fails.append(Counterexample(_g6(G), f"edge {e}: {msg}"))
        report.add(fails, random_trials)
    return report


# complement identity ------------------------------------------------------------


def _complement_violation(G: Graph) -> Optional[str]:
    return None if complement_identity_check(G) else "x mu(G, n-x) != (-1)^(n-1) (n-x) mu(co-G, x)"


def verify_complement_identity(max_n: int = 7, *, jobs: int = 1, cap: int = DEFAULT_CAP) -> Report:
    _cap_order(max_n, MAX_SWEEP_ORDER, "max_n")
    report = Report("complement", {"max_n": max_n}, cap=cap)
    with _Timer(report):
        stream = (G for n in range(1, max_n + 1) for G in graphs(n))
        _sweep(report, _complement_violation, stream, jobs)
    return report


# degree / eigenvalue bounds -----------------------------------------------------


def _degree_bound_violation(G: Graph) -> Optional[str]:
    d = degree_sequence(G)
    issues = []
    if lambda_k_vs(G, 1, d[0] + 1) is Order.LESS:
        issues.append(f"lambda_1 < d_1 + 1 = {d[0] + 1}")
    if lambda_k_vs(G, 2, d[1]) is Order.LESS:
        issues.append(f"lambda_2 < d_2 = {d[1]}")
    if lambda_k_vs(G, 3, d[2] - 1) is Order.LESS:
        issues.append(f"lambda_3 < d_3 - 1 = {d[2] - 1}")
    return "; ".join(issues) or None


def verify_degree_eigenvalue_bounds(max_n: int = 7, *, jobs: int = 1, cap: int = DEFAULT_CAP) -> Report:
    """``d_1 <= λ_1 - 1``, ``d_2 <= λ_2``, ``d_3 <= λ_3 + 1`` on connected graphs, ``n >= 4``."""
    _cap_order(max_n, MAX_SWEEP_ORDER, "max_n")
    report = Report("degree-bounds", {"min_n": 4, "max_n": max_n}, cap=cap)
    with _Timer(report):
        _sweep(report, _degree_bound_violation, _connected_range(4, max_n), jobs)
    return report


# cospectral invariants ----------------------------------------------------------


def cospectral_groups(n: int, connected_only: bool = False) -> dict[tuple[int, ...], list[Graph]]:
    groups: dict[tuple[int, ...], list[Graph]] = defaultdict(list)
    for G in graphs(n, connected_only=connected_only):
        groups[charpoly(G).coeffs].append(G)
    return groups


def _invariants(G: Graph) -> tuple[int, int, int, int, int]:
    return (
        G.n,
        G.num_edges,
        len(components(G)),
        spanning_tree_count_det(G),
        sum(d * d for d in G.degrees()),
    )


def verify_cospectral_invariants(max_n: int = 6, *, cap: int = DEFAULT_CAP) -> Report:
    """Within every L-cospectral class: equal order, size, component count,
    spanning-tree count and sum of squared degrees."""
    _cap_order(max_n, 8, "max_n")
    report = Report("cospectral-invariants", {"max_n": max_n}, cap=cap)
    names = ("n", "edges", "components", "spanning_trees", "sum_deg_sq")
    with _Timer(report):
        for n in range(1, max_n + 1):
            fails = []
            groups = cospectral_groups(n)
            examined = 0
            for key, members in sorted(groups.items()):
                examined += len(members)
                mu = IntPoly(key)
                for G in members:
                    if multiplicity_at(mu, 0) != len(components(G)):
                        fails.append(Counterexample(_g6(G), "component count != mult(0)"))
                if len(members) < 2:
                    continue
                ref = _invariants(members[0])
                for G in members[1:]:
                    inv = _invariants(G)
                    for name, a, b in zip(names, ref, inv):
                        if a != b:
                            fails.append(Counterexample(_g6(G), f"{name} {b} != {a} in cospectral class"))
                report.info.append(
                    f"n={n} cospectral class: " + " ".join(sorted(_g6(G) for G in members))
                )
            report.add(fails, examined)
    return report


# degree sequences ---------------------------------------------------------------


def feasible_degree_sequences(n: int, p: int, q: int, variant: Variant | str) -> list[tuple[int, ...]]:
    """Degree sequences ``(d_1, d_2, 3^a, 2^b, 1^c)`` compatible with the
    spectrum of ``B(p,q,p)`` (or ``B'(p,q,p)``).

    Constraints: the order, edge count and sum of squared degrees of the
    binary star (all spectral invariants), ``d_3 <= 3`` and the largest-degree
    cap ``d_1 <= p+q`` (``p+q+1`` for ``B'``) that the bracket on ``λ_1`` gives.
    """
    P = BinaryStarParams(Variant.parse(variant), p, q, p)
    if P.order != n:
        raise ValueError(f"{P} has order {P.order}, not {n}")
    G = binary_star(P)
    m = G.num_edges
    sq = sum(d * d for d in G.degrees())
    cap1 = p + q if P.variant is Variant.B else p + q + 1
    out = []
    for d1 in range(1, cap1 + 1):
        for d2 in range(1, d1 + 1):
            for n3 in range(0, n - 1):
                for n2 in range(0, n - 1 - n3):
                    n1 = n - 2 - n3 - n2
                    tail_max = 3 if n3 else 2 if n2 else 1
                    if n1 + n2 + n3 and tail_max > d2:
                        continue
                    if d1 + d2 + 3 * n3 + 2 * n2 + n1 != 2 * m:
                        continue
                    if d1 * d1 + d2 * d2 + 9 * n3 + 4 * n2 + n1 != sq:
                        continue
                    out.append((d1, d2) + (3,) * n3 + (2,) * n2 + (1,) * n1)
    return sorted(out, reverse=True)


DEGREE_SEQUENCE_TABLE: dict[tuple[int, int, int], list[tuple[int, ...]]] = {
    (6, 1, 2): [(3, 3, 2, 2, 1, 1)],
    (6, 0, 4): [(4, 4, 2, 2, 2, 2), (4, 3, 3, 3, 2, 1)],
    (7, 1, 3): [(4, 4, 2, 2, 2, 1, 1), (4, 3, 3, 3, 1, 1, 1)],
    (7, 0, 5): [(5, 5, 2, 2, 2, 2, 2), (5, 4, 3, 3, 3, 1, 1)],
}


def verify_degree_sequences(max_order: int = 14, *, cap: int = DEFAULT_CAP) -> Report:
    """Reproduce the small-order feasibility table for ``B(p,q,p)`` and check
    that every feasible list contains the binary star's own sequence."""
    report = Report("degree-sequences", {"max_order": max_order}, cap=cap)
    with _Timer(report):
        fails = []
        count = 0
        for (n, p, q), want in sorted(DEGREE_SEQUENCE_TABLE.items()):
            got = feasible_degree_sequences(n, p, q, Variant.B)
            count += 1
            if got != sorted(want, reverse=True):
                G = binary_star(Variant.B, p, q, p)
                fails.append(Counterexample(_g6(G), f"(n={n}, p={p}, q={q}): {got} != table {want}"))
        for n in range(4, max_order + 1):
            for variant in Variant:
                for p in range(0, (n - 2) // 2 + 1):
                    q = n - 2 - 2 * p
                    if variant is Variant.B and q < 1:
                        continue
                    G = binary_star(variant, p, q, p)
                    own = degree_sequence(G)
                    count += 1
                    if own not in feasible_degree_sequences(n, p, q, variant):
                        fails.append(Counterexample(_g6(G), f"own degree sequence {own} not feasible"))
        report.add(fails, count)
    return report


# DLS ----------------------------------------------------------------------------


def dls_targets(n: int) -> list[BinaryStarParams]:
    out = []
    for p in range(0, (n - 2) // 2 + 1):
        q = n - 2 - 2 * p
        if q >= 1:
            out.append(BinaryStarParams(Variant.B, p, q, p))
        out.append(BinaryStarParams(Variant.BPrime, p, q, p))
    return out


def dls_check(max_n: int = 8, *, all_small_n: int = 5, cap: int = DEFAULT_CAP) -> Report:
    """Every ``B(p,q,p)`` and ``B'(p,q,p)`` of order ``<= max_n`` is alone in its
    L-cospectral class; every graph of order ``<= all_small_n`` is DLS.

    Only connected graphs are searched for mates of the binary stars: the
    number of components is determined by the spectrum.
    """
    _cap_order(max_n, MAX_SWEEP_ORDER, "max_n")
    report = Report("dls", {"max_n": max_n, "all_small_n": all_small_n}, cap=cap)
    report.info.append("mates searched among connected graphs (component count is a spectral invariant)")
    with _Timer(report):
        for n in range(2, max_n + 1):
            groups = cospectral_groups(n, connected_only=True)
            examined = sum(len(v) for v in groups.values())
            fails = []
            for P in dls_targets(n):
                G = binary_star(P)
                members = groups.get(charpoly(G).coeffs, [])
                forms = {canonical_form(H) for H in members}
                if canonical_form(G) not in forms:
                    fails.append(Counterexample(_g6(G), f"{P} missing from the connected stream"))
                elif len(members) > 1:
                    mates = " ".join(sorted(_g6(H) for H in members))
                    fails.append(Counterexample(_g6(G), f"{P} has L-cospectral mates: {mates}"))
            nontrivial = sorted(
                " ".join(sorted(_g6(H) for H in ms)) for ms in groups.values() if len(ms) > 1
            )
            report.info.append(f"n={n}: {len(nontrivial)} nontrivial connected cospectral classes")
            if n <= 7:
                report.info.extend(f"n={n} class: {c}" for c in nontrivial)
            report.add(fails, examined)
        for n in range(1, all_small_n + 1):
            fails = []
            groups = cospectral_groups(n)
            for members in groups.values():
                if len(members) > 1:
                    mates = " ".join(sorted(_g6(H) for H in members))
                    fails.append(Counterexample(_g6(members[0]), f"order {n} graph not DLS: {mates}"))
            report.add(fails, sum(len(v) for v in groups.values()))
    return report


def s_minus_two_candidates(p: int, q: int) -> dict[str, Graph]:
    """Connected graphs with the degree sequence of ``B(p,q,p)``, adjacent
    centres and ``q-2`` common degree-2 neighbours.

    ``"triangle"``: two private neighbours of one centre are adjacent.
    ``"square"``: a private neighbour of each centre are adjacent.
    Vertices: ``w_1..w_{q-2}``, then ``x, y``, then pendants, then ``u, v``.
    """
    if p < 1 or q < 2:
        raise ValueError("need p >= 1 and q >= 2")
    n = 2 * p + q + 2
    u, v = n - 2, n - 1
    ws = list(range(q - 2))
    x, y = q - 2, q - 1
    pend = list(range(q, n - 2))
    base = [(u, v)] + [(w, u) for w in ws] + [(w, v) for w in ws] + [(x, y)]
    # triangle: x, y at u; u keeps p-1 pendants, v gets p+1
    tri = base + [(x, u), (y, u)]
    tri += [(t, u) for t in pend[: p - 1]] + [(t, v) for t in pend[p - 1:]]
    sq = base + [(x, u), (y, v)]
    sq += [(t, u) for t in pend[:p]] + [(t, v) for t in pend[p:]]
    return {"triangle": Graph.from_edges(n, tri), "square": Graph.from_edges(n, sq)}


def s_minus_one_candidate(p: int, q: int) -> Graph:
    """``B'(p, q-1, p)`` with an extra pendant attached to one of its pendants."""
    if p < 1 or q < 1:
        raise ValueError("need p >= 1 and q >= 1")
    H = binary_star(Variant.BPrime, p, q - 1, p)
    edges = H.edges() + [(0, H.n)]
    return Graph.from_edges(H.n + 1, edges)


# closed forms -------------------------------------------------------------------


def verify_closed_forms(max_order: int = 14, *, join_trials: int = 500, join_max_order: int = 12,
                        seed: int = 0, cap: int = DEFAULT_CAP) -> Report:
    """Closed-form characteristic polynomials equal the direct computation."""
    _cap_order(max_order, MAX_FAMILY_ORDER, "max_order")
    report = Report("closed-forms", {"max_order": max_order, "join_trials": join_trials,
                                     "join_max_order": join_max_order, "seed": seed}, cap=cap)
    with _Timer(report):
        fails = []
        count = 0

        def cmp(G: Graph, closed: IntPoly, label: str) -> None:
            nonlocal count
            count += 1
            if closed != charpoly(G):
                fails.append(Counterexample(_g6(G), f"{label}: closed form {closed} != {charpoly(G)}"))

        for n in range(3, max_order + 1):
            for P in binary_star_params(n, p_ge_r=False):
                G = binary_star(P)
                if P.variant is Variant.B:
                    cmp(G, charpoly_binary_star(P.p, P.q, P.r), str(P))
                else:
                    cmp(G, charpoly_binary_star_prime(P.p, P.q, P.r), str(P))
                    if P.q == 0 and P.p + P.r >= 2:
                        cmp(G, charpoly_double_star(P.p, P.r), f"S({P.p},{P.r})")
            for m in range(2, n):
                cmp(k1_join_family(n, m), charpoly_k1_join_family(n, m), f"K1+K{n - m}+K{m - 1}")
        rng = random.Random(seed)
        for _ in range(join_trials):
            total = rng.randint(2, join_max_order)
            n1 = rng.randint(1, total - 1)
            G1 = _random_graph(rng, n1)
            G2 = _random_graph(rng, total - n1)
            cmp(join(G1, G2), charpoly_join(G1, G2), f"join of {_g6(G1)} and {_g6(G2)}")
        report.add(fails, count)
    return report


def verify_charpoly_methods(max_n: int = 7, *, jobs: int = 1, cap: int = DEFAULT_CAP) -> Report:
    """Faddeev-LeVerrier agrees with Bareiss interpolation on all graphs."""
    report = Report("charpoly-methods", {"max_n": max_n}, cap=cap)
    with _Timer(report):
        stream = (G for n in range(1, max_n + 1) for G in graphs(n))
        _sweep(report, _charpoly_methods_violation, stream, jobs)
    return report


def _charpoly_methods_violation(G: Graph) -> Optional[str]:
    a, b = charpoly(G), charpoly_bareiss(G)
    return None if a == b else f"Faddeev-LeVerrier {a} != Bareiss {b}"


CHECKS: dict[str, Callable[..., Report]] = {
    "lower-bound": verify_lower_bound,
    "alpha2": classify_equality_alpha2,
    "alpha-n-minus-2": classify_equality_alpha_n_minus_2,
    "brackets": verify_eigenvalue_brackets_sweep,
    "spanning-trees": verify_spanning_trees,
    "algebraic-connectivity": verify_algebraic_connectivity_corollary,
    "multiplicity": verify_multiplicity_lemmas,
    "interlacing": verify_interlacing,
    "complement": verify_complement_identity,
    "degree-bounds": verify_degree_eigenvalue_bounds,
    "cospectral-invariants": verify_cospectral_invariants,
    "degree-sequences": verify_degree_sequences,
    "dls": dls_check,
    "closed-forms": verify_closed_forms,
    "charpoly-methods": verify_charpoly_methods,
}
