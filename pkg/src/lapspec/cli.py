"""Command-line entry point: ``lapspec <subcommand> ...``.

Graphs are read as graph6, from a positional argument or from standard
input when the argument is ``-``.  Exit codes: 0 success (or verify pass),
1 verify fail, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import families, graph6, verify
from .canon import canonical_form, is_isomorphic
from .combinatorics import independence_number, max_independent_set
from .enumeration import ResourceCapError, graph_forms
from .graph import OrderCapError
from .report import render_report
from .roots import isolate_roots
from .spectral import charpoly, m_count

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_INTERVAL = re.compile(r"^\s*([\[(])\s*([^,\s]*)\s*,\s*([^,\s]*)\s*([\])])\s*$")


class UsageError(Exception):
    pass


def parse_number(text: str) -> Optional[Fraction]:
    """Integer or ``a/b`` rational; ``inf``/``-inf`` (and empty) mean unbounded."""
    t = text.strip().lower()
    if t in ("", "inf", "+inf", "-inf", "oo", "-oo"):
        return None
    try:
        return Fraction(t)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad interval endpoint {text!r}") from None


def parse_interval(text: str) -> tuple[Optional[Fraction], Optional[Fraction], bool, bool]:
    """``"[a,b]"``, ``"(a,b]"`` etc. to ``(a, b, include_a, include_b)``."""
    m = _INTERVAL.match(text)
    if not m:
        raise UsageError(f"--interval: expected e.g. '[0,2]' or '(2,7/2]', got {text!r}")
    lo, a, b, hi = m.groups()
    A, B = parse_number(a), parse_number(b)
    if A is not None and B is not None and A > B:
        raise UsageError(f"--interval: empty interval {text!r}")
    return A, B, lo == "[" and A is not None, hi == "]" and B is not None


def _read_graph(arg: str):
    text = sys.stdin.readline() if arg == "-" else arg
    try:
        return graph6.decode(text)
    except graph6.Graph6OrderError:
        raise
    except graph6.Graph6Error as exc:
        raise UsageError(f"graph6: {exc}") from None


def _fmt_num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# subcommands --------------------------------------------------------------------


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "binary-star":
        if args.variant is None or None in (args.p, args.q, args.r):
            raise UsageError("binary-star needs --variant, --p, --q, --r")
        G = families.binary_star(args.variant, args.p, args.q, args.r)
    elif fam == "double-star":
        G = families.double_star(_need(args, "p"), _need(args, "r"))
    elif fam == "k1-join":
        G = families.k1_join_family(_need(args, "n"), _need(args, "m"))
    elif fam == "double-starlike":
        G = families.double_starlike(_need(args, "p"), _need(args, "n"), _need(args, "q"))
    else:
        n = _need(args, "n")
        G = {"complete": families.complete, "path": families.path,
             "cycle": families.cycle, "star": families.star}[fam](n)
    print(graph6.encode(G))
    return EXIT_OK


def _need(args, name: str) -> int:
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--family {args.family} needs --{name}")
    return v


def cmd_charpoly(args) -> int:
    mu = charpoly(_read_graph(args.graph))
    if args.format == "json":
        print(json.dumps(mu.to_json()))
    else:
        print(mu)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    width = parse_number(args.width)
    if width is None or width <= 0:
        raise UsageError("--width must be a positive number")
    summary = isolate_roots(charpoly(_read_graph(args.graph)), width)
    if args.format == "json":
        print(json.dumps(summary.as_list(), indent=2))
        return EXIT_OK
    for e in sorted(summary, key=lambda e: e.lo, reverse=True):
        if e.exact:
            where = _fmt_num(e.lo)
        else:
            where = f"({_fmt_num(e.lo)}, {_fmt_num(e.hi)})  ~{float(e.midpoint()):.9f}"
        print(f"{where}  x{e.multiplicity}")
    return EXIT_OK


def cmd_count(args) -> int:
    a, b, ia, ib = parse_interval(args.interval)
    print(m_count(_read_graph(args.graph), a, b, ia, ib))
    return EXIT_OK


def cmd_alpha(args) -> int:
    G = _read_graph(args.graph)
    if args.witness:
        S = max_independent_set(G)
        print(f"{len(S)} {' '.join(map(str, S))}")
    else:
        print(independence_number(G))
    return EXIT_OK


def cmd_iso(args) -> int:
    G1, G2 = _read_graph(args.graph1), _read_graph(args.graph2)
    print("true" if is_isomorphic(G1, G2) else "false")
    return EXIT_OK


def cmd_canon(args) -> int:
    print(canonical_form(_read_graph(args.graph)).decode("ascii"))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    for form in graph_forms(args.n, args.connected):
        sys.stdout.write(form.decode("ascii") + "\n")
    return EXIT_OK


def _verify_call(args):
    cid = args.check_id
    seed = args.seed
    trials = args.trials
    jobs = args.jobs
    k = args.max_n

    def opt(**kw):
        return {key: v for key, v in kw.items() if v is not None}

    if cid == "lower-bound":
        return verify.verify_lower_bound(k or 7, jobs=jobs)
    if cid == "alpha2":
        return verify.classify_equality_alpha2(args.n or k or 6)
    if cid == "alpha-n-minus-2":
        return verify.classify_equality_alpha_n_minus_2(args.n or k or 6)
    if cid == "brackets":
        if args.variant is not None:
            if None in (args.p, args.q, args.r):
                raise UsageError("brackets with --variant needs --p, --q, --r")
            return verify.verify_eigenvalue_brackets(args.p, args.q, args.r, args.variant)
        return verify.verify_eigenvalue_brackets_sweep(k or 14)
    if cid == "spanning-trees":
        return verify.verify_spanning_trees(k or 16, jobs=jobs)
    if cid == "algebraic-connectivity":
        return verify.verify_algebraic_connectivity_corollary(k or 14)
    if cid == "multiplicity":
        return verify.verify_multiplicity_lemmas(k or 7, **opt(random_trials=trials, seed=seed), jobs=jobs)
    if cid == "interlacing":
        return verify.verify_interlacing(**opt(random_trials=trials, seed=seed, max_n=k))
    if cid == "complement":
        return verify.verify_complement_identity(k or 7, jobs=jobs)
    if cid == "degree-bounds":
        return verify.verify_degree_eigenvalue_bounds(k or 7, jobs=jobs)
    if cid == "cospectral-invariants":
        return verify.verify_cospectral_invariants(k or 6)
    if cid == "degree-sequences":
        return verify.verify_degree_sequences(k or 14)
    if cid == "dls":
        return verify.dls_check(k or 8)
    if cid == "closed-forms":
        return verify.verify_closed_forms(k or 14, **opt(join_trials=trials, seed=seed))
    if cid == "charpoly-methods":
        return verify.verify_charpoly_methods(k or 7, jobs=jobs)
    raise UsageError(f"unknown check {cid!r}; known: {', '.join(verify.CHECKS)}")


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = _verify_call(args)
    print(render_report(report, args.format))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_dls(args) -> int:
    report = verify.dls_check(args.max_n)
    print(render_report(report, args.format))
    return EXIT_OK if report.passed else EXIT_FAIL


# parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lapspec", description="Exact Laplacian spectra of small graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="print graph6 of a named graph")
    c.add_argument("--family", required=True, choices=[
        "binary-star", "double-star", "k1-join", "double-starlike",
        "complete", "path", "cycle", "star"])
    c.add_argument("--variant", choices=["B", "BPrime", "B'"])
    for name in ("p", "q", "r", "n", "m"):
        c.add_argument(f"--{name}", type=int)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("charpoly", help="characteristic polynomial of the Laplacian")
    c.add_argument("graph")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_charpoly)

    c = sub.add_parser("spectrum", help="isolated Laplacian eigenvalues, largest first")
    c.add_argument("graph")
    c.add_argument("--width", default="1/1048576")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("count", help="eigenvalues in an interval, with multiplicity")
    c.add_argument("graph")
    c.add_argument("--interval", required=True)
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("alpha", help="independence number")
    c.add_argument("graph")
    c.add_argument("--witness", action="store_true")
    c.set_defaults(func=cmd_alpha)

    c = sub.add_parser("iso", help="isomorphism test")
    c.add_argument("graph1")
    c.add_argument("graph2")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("canon", help="canonical graph6 form")
    c.add_argument("graph")
    c.set_defaults(func=cmd_canon)

    c = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--connected", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("verify", help="run a named check")
    c.add_argument("check_id")
    c.add_argument("--max-n", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--seed", type=int)
    c.add_argument("--trials", type=int)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--variant", choices=["B", "BPrime", "B'"])
    for name in ("p", "q", "r"):
        c.add_argument(f"--{name}", type=int)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("dls", help="spectral determination of B(p,q,p) and B'(p,q,p)")
    c.add_argument("--max-n", type=int, default=8)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_dls)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ResourceCapError, OrderCapError, graph6.Graph6OrderError) as exc:
        print(f"lapspec: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"lapspec: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
