"""``chordbip`` command line: one subcommand per capability.

Graphs are graph6 lines given as arguments or, when none are given, read from
standard input.  ``--json`` switches to JSON lines: a header record echoing
seed and budgets, then one record per result.  Worker count never appears
in the output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Iterable, Iterator, TextIO

from . import __version__
from .chordality import bisimplicial_edges, find_peeo, random_chordal_bipartite, recognize
from .connectivity import BudgetError, vertex_connectivity
from .constructions import FAMILIES, named
from .graph import Graph, Graph6Error, GraphError, eliminate_edge, induced, parse_graph6, to_graph6
from .search import (
    FilterStats,
    Predicates,
    bipartite_classes,
    conjecture_table,
    enumerate_min_size,
    filter_stream,
    peeo_counterexample_search,
)
from .verify import CHECKERS, run_checker

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_TRUNCATED = 2


class Output:
    def __init__(self, args: argparse.Namespace, stream: TextIO) -> None:
        self.json = args.json
        self.stream = stream
        if self.json:
            header = {"type": "header", "command": args.command, "version": __version__,
                      "seed": args.seed, "budget_ms": args.budget_ms}
            self.record(header)

    def record(self, obj: dict[str, Any]) -> None:
        self.stream.write(json.dumps(obj, sort_keys=True) + "\n")

    def emit(self, obj: dict[str, Any], human: str) -> None:
        if self.json:
            self.record(obj)
        else:
            self.stream.write(human + "\n")


def _lines(args: argparse.Namespace, stdin: TextIO) -> Iterable[str]:
    if getattr(args, "graphs", None):
        return args.graphs
    if getattr(args, "input", None):
        with open(args.input) as fh:
            return fh.read().splitlines()
    return (line for line in stdin)


def _graphs(args: argparse.Namespace, out: Output, stdin: TextIO,
            status: list[int]) -> Iterator[tuple[str, Graph]]:
    for raw in _lines(args, stdin):
        # first token only, so annotated human output can be piped back in
        parts = raw.split()
        if not parts:
            continue
        line = parts[0]
        try:
            yield line, parse_graph6(line)
        except Graph6Error as exc:
            status[0] = EXIT_INPUT
            out.emit({"type": "error", "graph6": line, "error": str(exc)},
                     f"{line}\terror: {exc}")


def _heartbeat(args: argparse.Namespace):
    if args.quiet:
        return None
    return lambda msg: print(msg, file=sys.stderr, flush=True)


# --- subcommands ------------------------------------------------------------------------

def cmd_recognize(args, out, stdin) -> int:
    status = [EXIT_OK]
    for line, g in _graphs(args, out, stdin, status):
        r = recognize(g)
        wit = list(r.witness) if r.witness else None
        out.emit({"type": "recognize", "graph6": line, "chordal_bipartite": r.chordal_bipartite,
                  "reason": r.reason.value, "witness": wit},
                 f"{line}\t{r.chordal_bipartite}\t{r.reason.value}"
                 + (f"\t{' '.join(map(str, wit))}" if wit else ""))
    return status[0]


def cmd_kappa(args, out, stdin) -> int:
    status = [EXIT_OK]
    for line, g in _graphs(args, out, stdin, status):
        if g.n == 0:
            status[0] = EXIT_INPUT
            out.emit({"type": "error", "graph6": line, "error": "empty graph"},
                     f"{line}\terror: empty graph")
            continue
        k = vertex_connectivity(g)
        out.emit({"type": "kappa", "graph6": line, "n": g.n, "m": g.m, "kappa": k},
                 f"{line}\t{k}")
    return status[0]


def cmd_bisimplicial(args, out, stdin) -> int:
    status = [EXIT_OK]
    for line, g in _graphs(args, out, stdin, status):
        try:
            edges = bisimplicial_edges(g)
        except GraphError as exc:
            status[0] = EXIT_INPUT
            out.emit({"type": "error", "graph6": line, "error": str(exc)},
                     f"{line}\terror: {exc}")
            continue
        out.emit({"type": "bisimplicial", "graph6": line, "edges": [list(e) for e in edges]},
                 f"{line}\t" + " ".join(f"{u}-{v}" for u, v in edges))
    return status[0]


def cmd_eliminate(args, out, stdin) -> int:
    try:
        g = parse_graph6(args.graph)
        h = eliminate_edge(g, (args.u, args.v))
    except (Graph6Error, GraphError) as exc:
        out.emit({"type": "error", "graph6": args.graph, "error": str(exc)}, f"error: {exc}")
        return EXIT_INPUT
    labels = induced(g, g.all_vertices & ~((1 << args.u) | (1 << args.v)))[1]
    out.emit({"type": "eliminate", "graph6": args.graph, "edge": [args.u, args.v],
              "result": to_graph6(h), "labels": list(labels)}, to_graph6(h))
    return EXIT_OK


def cmd_peeo(args, out, stdin) -> int:
    status = [EXIT_OK]
    for line, g in _graphs(args, out, stdin, status):
        try:
            order = find_peeo(g, args.mode)
        except GraphError as exc:
            status[0] = EXIT_INPUT
            out.emit({"type": "error", "graph6": line, "error": str(exc)},
                     f"{line}\terror: {exc}")
            continue
        steps = None if order is None else [list(e) for e in order.steps]
        out.emit({"type": "peeo", "graph6": line, "mode": args.mode, "order": steps},
                 f"{line}\t" + ("none" if steps is None
                                else " ".join(f"{u}-{v}" for u, v in steps)))
    return status[0]


def cmd_construct(args, out, stdin) -> int:
    try:
        if args.family == "random":
            if len(args.params) != 2:
                raise GraphError("random takes n and target_m")
            n, target = args.params
            g = random_chordal_bipartite(n, target, args.seed or 0)
            obj = {"type": "construct", "name": f"random({n}, {target}, seed={args.seed or 0})",
                   "graph6": to_graph6(g), "n": g.n, "m": g.m}
            out.emit(obj, obj["graph6"])
            return EXIT_OK
        ng = named(args.family, *args.params)
    except (GraphError, ValueError, TypeError) as exc:
        out.emit({"type": "error", "error": str(exc)}, f"error: {exc}")
        return EXIT_INPUT
    g = ng.graph
    verified = {"kappa": vertex_connectivity(g) if g.n else 0, "m": g.m,
                "chordal_bipartite": recognize(g).chordal_bipartite}
    claims = {"kappa": ng.claims.kappa, "m": ng.claims.m,
              "chordal_bipartite": ng.claims.chordal_bipartite}
    out.emit({"type": "construct", "name": ng.name, "graph6": to_graph6(g), "n": g.n,
              "claims": claims, "verified": verified, "claims_hold": claims == verified},
             f"{to_graph6(g)}\tn={g.n} m={g.m} kappa={verified['kappa']} "
             f"chordal_bipartite={verified['chordal_bipartite']}")
    return EXIT_OK if claims == verified else EXIT_INPUT


def cmd_verify(args, out, stdin) -> int:
    status = [EXIT_OK]
    names = CHECKERS if args.checker == "all" else (args.checker,)
    for line, g in _graphs(args, out, stdin, status):
        for name in names:
            try:
                v = run_checker(name, g)
            except BudgetError as exc:
                v = {"checker": name, "status": "budget", "error": str(exc)}
            if v["status"] == "fail":
                status[0] = EXIT_INPUT
            out.emit(dict(v, type="verdict", graph6=line), f"{line}\t{name}\t{v['status']}")
    return status[0]


def cmd_search(args, out, stdin) -> int:
    rec = enumerate_min_size(args.n, args.k, jobs=args.jobs, budget_ms=args.budget_ms,
                             progress=_heartbeat(args))
    out.emit(dict(rec.to_json(), type="search"),
             f"n={rec.n} k={rec.k} m_min={rec.m_min} witnesses={' '.join(rec.witnesses)}"
             + (" (truncated)" if rec.truncated else ""))
    return EXIT_TRUNCATED if rec.truncated else EXIT_OK


def _predicates(args) -> Predicates:
    return Predicates(bipartite=args.bipartite, chordal_bipartite=args.chordal_bipartite,
                      kappa_at_least=args.kappa_at_least, min_degree=args.min_degree,
                      edges_at_most=args.edges_at_most, edges_equal=args.edges_equal,
                      bound=args.bound)


def cmd_filter(args, out, stdin) -> int:
    stats = FilterStats()
    for line, g in filter_stream(_lines(args, stdin), _predicates(args), stats):
        out.emit({"type": "graph", "graph6": line, "n": g.n, "m": g.m}, line)
    if out.json:
        out.record(dict(stats.to_json(), type="stats"))
    else:
        print(json.dumps(stats.to_json(), sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args, out, stdin) -> int:
    kappa = args.kappa_at_least if args.kappa_at_least is not None else 1
    for s in bipartite_classes(args.n, kappa=kappa, jobs=args.jobs):
        if args.chordal_bipartite and not recognize(parse_graph6(s)).chordal_bipartite:
            continue
        out.emit({"type": "graph", "graph6": s}, s)
    return EXIT_OK


def cmd_conjecture(args, out, stdin) -> int:
    stream = None
    if args.stream:
        with open(args.stream) as fh:
            stream = fh.read().splitlines()
    try:
        rows = conjecture_table(args.k, range(args.n_min, args.n_max + 1), stream=stream,
                                jobs=args.jobs, budget_ms=args.budget_ms,
                                progress=_heartbeat(args))
    except BudgetError as exc:
        out.emit({"type": "error", "error": str(exc)}, f"error: {exc}")
        return EXIT_INPUT
    truncated = False
    for row in rows:
        truncated |= row.truncated
        j = row.to_json()
        out.emit(dict(j, type="conjecture"),
                 f"n={row.n}\tm_min={row.m_min}\tintercept={j['intercept']}\t{row.mode}")
    return EXIT_TRUNCATED if truncated else EXIT_OK


def cmd_converse(args, out, stdin) -> int:
    g = peeo_counterexample_search(args.n_max, jobs=args.jobs)
    if g is None:
        out.emit({"type": "converse", "n_max": args.n_max, "graph6": None, "order": None},
                 "none")
        return EXIT_OK
    order = find_peeo(g, "backtracking")
    out.emit({"type": "converse", "n_max": args.n_max, "graph6": to_graph6(g),
              "witness_cycle": list(recognize(g).witness or ()),
              "order": [list(e) for e in order.steps]},
             f"{to_graph6(g)}\t" + " ".join(f"{u}-{v}" for u, v in order.steps))
    return EXIT_OK


# --- parser --------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    # accepted before and after the subcommand; the subcommand copy must not
    # overwrite a value given up front, hence SUPPRESS there
    def d(value):
        return argparse.SUPPRESS if suppress else value
    p.add_argument("--json", action="store_true", default=d(False), help="emit JSON lines")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes")
    p.add_argument("--budget-ms", type=int, default=d(None), help="wall-clock budget")
    p.add_argument("--seed", type=int, default=d(None))
    p.add_argument("--quiet", action="store_true", default=d(False),
                   help="no heartbeats on stderr")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)

    parser = argparse.ArgumentParser(prog="chordbip", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def graphs_cmd(name: str, help: str, *lead: tuple) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        for args, kwargs in lead:
            p.add_argument(*args, **kwargs)
        p.add_argument("graphs", nargs="*", help="graph6 strings (default: stdin)")
        p.add_argument("--input", help="read graph6 lines from this file")
        return p

    graphs_cmd("recognize", "chordal bipartite test with a chordless-cycle witness")
    graphs_cmd("kappa", "vertex connectivity")
    graphs_cmd("bisimplicial", "list bisimplicial edges")
    p = graphs_cmd("peeo", "perfect edge elimination order")
    p.add_argument("--mode", choices=("greedy", "backtracking"), default="greedy")

    p = sub.add_parser("eliminate", parents=[common], help="delete both ends of an edge")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)

    p = sub.add_parser("construct", parents=[common], help="build a named graph")
    p.add_argument("family", choices=FAMILIES + ("random",))
    p.add_argument("params", nargs="*", type=int)

    graphs_cmd("verify", "run lemma/theorem checkers",
               (("checker",), {"choices": CHECKERS + ("all",)}))

    p = sub.add_parser("search", parents=[common], help="exhaustive minimum size")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("filter", parents=[common], help="filter a graph6 stream")
    p.add_argument("--input", help="read graph6 lines from this file")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--chordal-bipartite", action="store_true")
    p.add_argument("--kappa-at-least", type=int)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--edges-at-most", type=int)
    p.add_argument("--edges-equal", type=int)
    p.add_argument("--bound", choices=("le", "eq"),
                   help="compare m with the minimum-size bound for the graph's order")

    p = sub.add_parser("enumerate", parents=[common],
                       help="all connected bipartite classes of one order")
    p.add_argument("n", type=int)
    p.add_argument("--chordal-bipartite", action="store_true")
    p.add_argument("--kappa-at-least", type=int)

    p = sub.add_parser("conjecture", parents=[common], help="minimum sizes for κ >= k")
    p.add_argument("k", type=int)
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--stream", help="graph6 file supplying orders beyond exhaustive range")

    p = sub.add_parser("converse", parents=[common],
                       help="smallest non-chordal-bipartite graph with a PEEO")
    p.add_argument("n_max", type=int)
    return parser


COMMANDS = {
    "recognize": cmd_recognize,
    "kappa": cmd_kappa,
    "bisimplicial": cmd_bisimplicial,
    "eliminate": cmd_eliminate,
    "peeo": cmd_peeo,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "filter": cmd_filter,
    "enumerate": cmd_enumerate,
    "conjecture": cmd_conjecture,
    "converse": cmd_converse,
}


def main(argv: list[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args, stdout or sys.stdout)
    try:
        return COMMANDS[args.command](args, out, stdin or sys.stdin)
    except ValueError as exc:
        out.emit({"type": "error", "error": str(exc)}, f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
