"""Command-line entry point: ``tricyclic-spectra <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterator

from .classify import classify_tricyclic, scan_forbidden, verify_against_spectrum
from .enumeration import blockgraph_check, enumerate_connected, theorem_check
from .errors import GraphError
from .families import Family, expected_quotient_poly, generate, parse_spec, quotient_of
from .graph_core import Graph, parse_graph6, write_graph6
from .spectra import char_poly, distance_spectrum
from .structure import base_of, base_type, blockgraph_verdict
from .subgraph import canonical_form

TOL_ENV = "TRICYCLIC_TOL"

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return 1e-9
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV} must be a number, got {raw!r}") from None


def _graph_inputs(args) -> Iterator[tuple[str, Graph]]:
    lines = args.graphs if args.graphs else (ln for ln in sys.stdin)
    for line in lines:
        text = line.strip()
        if not text:
            continue
        yield text, parse_graph6(text)


def _emit(obj, args) -> None:
    if args.json:
        print(json.dumps(obj, separators=(",", ":")))
    elif isinstance(obj, str):
        print(obj)
    else:
        print(json.dumps(obj))


# -- subcommands ----------------------------------------------------------------

def cmd_spectrum(args) -> int:
    for text, g in _graph_inputs(args):
        spec = distance_spectrum(g)
        if args.json:
            _emit({"graph6": text, "spectrum": spec.to_json()}, args)
        else:
            print(", ".join(f"{x:.12f}" for x in spec.values))
    return EXIT_OK


def cmd_classify(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    for text, g in _graph_inputs(args):
        v = verify_against_spectrum(g, tol) if args.verify else classify_tricyclic(g)
        if args.json:
            _emit({"graph6": text, **v.to_json()}, args)
            continue
        parts = [text, "accepted" if v.accepted else "rejected"]
        parts.append(f"witness {v.witness}" if v.accepted else f"reason {v.reason_text}")
        if args.verify:
            parts += [f"lambda2 {v.lambda2:.12g}", f"agreement {str(v.agreement).lower()}"]
            if v.boundary_suspect:
                parts.append("boundary-suspect")
        print("  ".join(parts))
    return EXIT_OK


def cmd_generate(args) -> int:
    g = generate(parse_spec(args.spec))
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
    else:
        print(write_graph6(g))
    return EXIT_OK


def cmd_scan(args) -> int:
    for text, g in _graph_inputs(args):
        hits = [{"pattern": f"F_{i}", "subset": list(occ.subset)} for i, occ in scan_forbidden(g)]
        _emit(hits if args.json else {"graph6": text, "hits": hits}, args)
    return EXIT_OK


def cmd_base(args) -> int:
    for text, g in _graph_inputs(args):
        b = base_of(g)
        bt = base_type(b)
        _emit({"graph6": text, "base": write_graph6(b), **bt.to_json()}, args)
    return EXIT_OK


def cmd_blockgraph(args) -> int:
    for text, g in _graph_inputs(args):
        _emit({"graph6": text, **blockgraph_verdict(g).to_json()}, args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    m = args.n + 2 if args.tricyclic else args.m
    graphs = enumerate_connected(args.n, m, method=args.method, jobs=args.jobs, allow_large=args.allow_large)
    if args.json:
        _emit({"n": args.n, "m": m, "count": len(graphs)}, args)
    else:
        for g in graphs:
            print(canonical_form(g))
    return EXIT_OK


def cmd_check_theorem(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    reports = theorem_check(args.max_n, tol=tol, jobs=args.jobs, method=args.method,
                            allow_large=args.allow_large)
    if args.dump:
        with open(args.dump, "w") as fh:
            for n in range(4, args.max_n + 1):
                for g in enumerate_connected(n, n + 2, allow_large=args.allow_large):
                    fh.write(f"{canonical_form(g)}\n")
    bad = sum(len(r.disagreements) for r in reports)
    if args.json:
        _emit({"reports": [r.to_json() for r in reports], "disagreements": bad}, args)
    else:
        for r in reports:
            print(f"n={r.n}: {r.total_graphs} classes, {r.accepted} accepted, "
                  f"{r.spectral_positive} with lambda2 < -1/2, {len(r.disagreements)} disagreements, "
                  f"{len(r.out_of_scope)} K4-base (out of scope), "
                  f"{len(r.boundary_suspects)} boundary suspects, {r.runtime:.2f}s")
        print(f"total disagreements: {bad}")
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_check_blockgraphs(args) -> int:
    r = blockgraph_check(args.max_n, allow_large=args.allow_large)
    if args.json:
        _emit(r.to_json(), args)
    else:
        print(f"n<={r.n}: {r.total_graphs} block graphs, {len(r.disagreements)} disagreements, "
              f"{len(r.boundary_suspects)} boundary suspects")
    return EXIT_DISAGREE if r.disagreements else EXIT_OK


def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like a..b, got {text!r}") from None
    if lo > hi or lo < 0:
        raise UsageError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def cmd_polycheck(args) -> int:
    ks = _parse_range(args.range)
    ok = 0
    failures = []
    for k in ks:
        q = quotient_of(args.family, k)
        if q.equitable and char_poly(q) == expected_quotient_poly(args.family, k):
            ok += 1
        else:
            failures.append(k)
    if args.json:
        _emit({"family": args.family, "checked": len(ks), "holding": ok, "failures": failures}, args)
    else:
        print(f"{ok}/{len(ks)} coefficient identities hold")
    return EXIT_OK if not failures else EXIT_DOMAIN


# -- parser -------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tricyclic-spectra",
                description="Distance spectra and the lambda_2 < -1/2 classification of tricyclic graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graphs", nargs="*", help="graph6 strings (default: read stdin, one per line)")
        sp.add_argument("--json", action="store_true", help="one JSON document per input line")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("spectrum", cmd_spectrum, "distance eigenvalues, descending")
    sp = graph_cmd("classify", cmd_classify, "decide lambda_2 < -1/2 for tricyclic graphs")
    sp.add_argument("--verify", action="store_true", help="also compute lambda_2 and check agreement")
    sp.add_argument("--tol", type=float, default=None, help=f"strictness tolerance (default ${TOL_ENV} or 1e-9)")
    graph_cmd("scan-forbidden", cmd_scan, "distance-preserving induced F_1..F_13")
    graph_cmd("base", cmd_base, "base graph and template label of a tricyclic graph")
    graph_cmd("blockgraph", cmd_blockgraph, "block-graph criterion verdict")

    sp = sub.add_parser("generate", help="emit a named graph")
    sp.add_argument("spec", nargs="+", metavar="FAMILY/PARAM",
                    help="t-general s t h1..h5 | t3 k | t4 t | t5 | t6 | t7 | t1 s t | t2 p q | f i | bg p q | bga")
    sp.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_generate)

    for name, func, help_text in (("enumerate", cmd_enumerate, "connected graphs up to isomorphism"),
                                  ("check-theorem", cmd_check_theorem, "exhaustive tricyclic verification"),
                                  ("check-blockgraphs", cmd_check_blockgraphs, "exhaustive block-graph verification")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--allow-large", action="store_true", help="lift the enumeration size guard")
        sp.set_defaults(func=func)
        if name == "enumerate":
            sp.add_argument("n", type=int)
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--m", type=int, default=None, help="edge count filter")
            g.add_argument("--tricyclic", action="store_true", help="shorthand for m = n + 2")
        else:
            sp.add_argument("--max-n", type=int, required=True)
        if name != "check-blockgraphs":
            sp.add_argument("--method", choices=("augment", "edges"), default="augment")
            sp.add_argument("--jobs", type=int, default=1)
        if name == "check-theorem":
            sp.add_argument("--tol", type=float, default=None)
            sp.add_argument("--dump", metavar="FILE", help="write the tricyclic corpus as graph6, one per line")

    sp = sub.add_parser("polycheck", help="check closed-form quotient polynomials")
    sp.add_argument("family", choices=(Family.T3.value, Family.T4.value))
    sp.add_argument("--range", required=True, help="parameter range a..b (inclusive)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_polycheck)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _report(exc, "usage", want_json)
        return EXIT_USAGE
    except GraphError as exc:
        _report(exc, type(exc).__name__, want_json)
        return EXIT_DOMAIN
    except BrokenPipeError:
        return EXIT_OK


def _report(exc: Exception, kind: str, want_json: bool) -> None:
    if want_json:
        print(json.dumps({"error": kind, "message": str(exc)}), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
