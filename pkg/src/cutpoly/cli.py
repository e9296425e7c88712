"""Command-line entry point.

Exit codes: 0 ok, 1 usage error, 2 invalid input, 3 resource cap exceeded,
4 a verdict in ``report`` failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, constructions, skeleton
from .errors import CutPolytopeError, LimitExceeded
from .graph import Cut, Graph, classify, format_graph, parse_graph
from .workbench import GeneratorSpec, generate, maxcut_bruteforce, report, report_json
from .workbench.generators import KINDS
from .workbench.maxcut import DEFAULT_MAXCUT_CAP

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CAP, EXIT_VERDICT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated part sizes, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=skeleton.DEFAULT_CAP, help="skeleton vertex cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", type=Path, help="write output to FILE instead of stdout")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--budget", type=int, default=analysis.DEFAULT_BUDGET, help="clique search node budget")

    p = _Parser(prog="cutpoly", description="1-skeleton of the cut polytope: adjacency, metrics, bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate a seeded graph")
    g.add_argument("--class", dest="kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--parts", type=_parts)

    def with_graph(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("graph", type=Path, help="graph file ('n m' header, then 'u v [w]' lines)")
        return sp

    with_graph("classify", "report graph classes")
    for name, help_ in (
        ("adjacent", "test adjacency of two cuts"),
        ("certify", "adjacency certificate"),
        ("witness", "non-adjacency witness"),
    ):
        sp = with_graph(name, help_)
        sp.add_argument("--x", type=_vertex_list, required=True, help='vertex list, e.g. "1,3"')
        sp.add_argument("--y", type=_vertex_list, required=True)
    with_graph("skeleton", "export the full skeleton as JSON")
    with_graph("diameter", "exact skeleton diameter")
    with_graph("clique", "exact skeleton clique number")
    sp = with_graph("color", "binary-representation coloring")
    sp.add_argument("--scheme", choices=("brm", "brm-star"), required=True)
    sp = with_graph("clique-construct", "explicit clique family")
    sp.add_argument("--kind", choices=("auto", "hamming-ball", "symmetric"), default="auto")
    sp = with_graph("maxcut", "brute-force max-cut")
    sp.add_argument("--maxcut-cap", type=int, default=DEFAULT_MAXCUT_CAP)
    sp = with_graph("report", "bounds, exact metrics and verdicts")
    sp.add_argument("--skip-metrics", action="store_true")
    return p


def _load(path: Path) -> Graph:
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def _cuts(g: Graph, args) -> tuple[Cut, Cut]:
    try:
        return Cut.of(g.n, args.x), Cut.of(g.n, args.y)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def run(args) -> tuple[object, str, int]:
    """Execute a parsed command; returns (json payload, text, exit code)."""
    cmd = args.command
    if cmd == "gen":
        g = generate(GeneratorSpec(args.kind, args.n, args.parts, args.seed))
        text = format_graph(g)
        return {"n": g.n, "edges": [list(e) for e in g.edges], "weights": list(g.weights)}, text, EXIT_OK

    g = _load(args.graph)
    if cmd == "classify":
        gc = classify(g)
        return gc.to_json(), f"{gc.most_specific}\n" + "".join(f"  {t}\n" for t in gc.tags), EXIT_OK
    if cmd == "adjacent":
        x, y = _cuts(g, args)
        ok = skeleton.is_adjacent(g, x, y)
        return {"adjacent": ok}, f"{'adjacent' if ok else 'not adjacent'}\n", EXIT_OK
    if cmd == "certify":
        x, y = _cuts(g, args)
        cert = skeleton.certify_adjacent(g, x, y)
        return cert.to_json(), f"c = {list(cert.c)}\nverified = {cert.verified}\n", EXIT_OK
    if cmd == "witness":
        x, y = _cuts(g, args)
        w = skeleton.witness_nonadjacent(g, x, y)
        return w.to_json(), f"L = {w.l.vertices()} (component {list(w.component)})\n", EXIT_OK

    if cmd == "maxcut":
        res = maxcut_bruteforce(g, args.maxcut_cap)
        return res.to_json(), f"weight {res.weight}\ncut {res.cut.vertices()}\n", EXIT_OK
    if cmd == "report":
        doc = report(g, args.cap, args.budget, args.workers, exact=not args.skip_metrics)
        failed = [k for k, v in doc["verdicts"].items() if v is False]
        lines = [f"class: {doc['classification']['most_specific']}"]
        if doc["metrics"]:
            lines.append(f"diameter {doc['metrics']['diameter']}, clique number {doc['metrics']['clique_number']}"
                         + ("" if doc["metrics"]["clique_exact"] else " (lower bound)"))
        for k, v in sorted(doc["verdicts"].items()):
            lines.append(f"  {'PASS' if v else ('FAIL' if v is False else 'n/a ')} {k}")
        text = "\n".join(lines) + "\n"
        return doc, text, EXIT_VERDICT if failed else EXIT_OK

    s = skeleton.build_skeleton(g, args.cap, args.workers)
    if cmd == "skeleton":
        return s.to_json(), s.dumps() + "\n", EXIT_OK
    if cmd == "diameter":
        d = analysis.diameter(s)
        return {"diameter": d}, f"{d}\n", EXIT_OK
    if cmd == "clique":
        c = analysis.clique_number(s, args.budget)
        payload = {"clique_number": c.size, "clique_exact": c.exact, "witness_clique": list(c.witness)}
        return payload, f"{c.size}{'' if c.exact else ' (lower bound, budget exhausted)'}\n", EXIT_OK
    if cmd == "color":
        fn = constructions.brm_coloring if args.scheme == "brm" else constructions.brm_star_coloring
        col = fn(g, s)
        ok, bad = analysis.verify_coloring(s, col)
        payload = {"scheme": args.scheme, **col.to_json(), "proper": ok, "first_violation": bad and list(bad)}
        return payload, f"{col.distinct} colors of width {col.width}, proper={ok}\n", EXIT_OK
    if cmd == "clique-construct":
        kind = args.kind
        if kind == "auto":
            kind = "hamming-ball" if classify(g).has("Cycle") else "symmetric"
        fam = (constructions.hamming_ball_clique if kind == "hamming-ball" else constructions.symmetric_cut_clique)(g)
        ok, bad = analysis.verify_clique(s, fam.indices)
        payload = {**fam.to_json(), "valid": ok, "first_non_edge": bad and list(bad)}
        return payload, "".join(f"{c.vertices()}\n" for c in fam.cuts) + f"valid={ok}\n", EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, text, code = run(args)
    except UsageError as exc:
        print(f"cutpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"cutpoly: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CutPolytopeError as exc:
        print(f"cutpoly: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        out = report_json(payload) if args.command == "report" else json.dumps(payload, sort_keys=True) + "\n"
    else:
        out = text
    if args.out:
        args.out.write_text(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
