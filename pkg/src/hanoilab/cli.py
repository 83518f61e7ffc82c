"""Command-line laboratory: solvers, exact count tables, oracle
verification, conjecture probes, and graph enumeration.

Output is deterministic byte for byte for identical flags: every
collection is emitted in a fixed sorted order, JSON keys are sorted, and
CSV numbers are exact decimal integers (counts outgrow 64-bit range).

Exit codes: 0 success, 1 verification failure or resource cap, 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from dataclasses import dataclass

from . import recurrence
from .model import Model, MoveGraph, apply_all, standard_state
from .oracle import (
    DEFAULT_STATE_BUDGET,
    GoalPredicate,
    SearchCapExceeded,
    bfs_distance,
    conjecture_probe,
    verify_optimality,
)
from .solvers import a_symmetric, classical_solve, directed_move, q_sequence, zeta
from .verify import claim_harness

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PEG_PERMUTATIONS = tuple(
    dict(zip((1, 2, 3), perm)) for perm in itertools.permutations((1, 2, 3))
)


@dataclass(frozen=True)
class GraphClass:
    """One isomorphism class of strongly connected move graphs."""

    name: str
    representative: MoveGraph
    members: tuple[MoveGraph, ...]
    note: str

    @property
    def size(self) -> int:
        return len(self.members)


_CLASS_NOTES = {
    "cycle": "sqrt(3) closed forms",
    "linear": "3^n closed forms",
    "cycle-chord": "sqrt(17) closed forms",
    "five-edge": "growth ~2.34 (reciprocal cubic root)",
    "complete": "classical 2^n-1",
}


def all_strongly_connected_graphs() -> tuple[MoveGraph, ...]:
    """Every labeled strongly connected move graph on the three pegs,
    sorted by edge count then edge list."""
    all_edges = sorted((i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j)
    graphs = []
    for bits in range(1 << 6):
        edges = [edge for k, edge in enumerate(all_edges) if bits >> k & 1]
        graph = MoveGraph.from_edges(edges)
        if graph.is_strongly_connected():
            graphs.append(graph)
    return tuple(sorted(graphs, key=lambda g: (len(g.edges), g.sorted_edges())))


def _structural_name(graph: MoveGraph) -> str:
    m = len(graph.edges)
    if m == 3:
        return "cycle"
    if m == 5:
        return "five-edge"
    if m == 6:
        return "complete"
    # four edges: either two double edges (linear) or a cycle plus chord
    if all((j, i) in graph.edges for i, j in graph.edges):
        return "linear"
    return "cycle-chord"


def enumerate_graph_classes() -> tuple[GraphClass, ...]:
    """Group the strongly connected graphs under peg relabeling."""
    buckets: dict[tuple, list[MoveGraph]] = {}
    for graph in all_strongly_connected_graphs():
        canon = min(graph.relabel(perm).sorted_edges() for perm in PEG_PERMUTATIONS)
        buckets.setdefault(canon, []).append(graph)
    classes = []
    for members in buckets.values():
        members.sort(key=MoveGraph.sorted_edges)
        name = _structural_name(members[0])
        classes.append(
            GraphClass(name, members[0], tuple(members), _CLASS_NOTES[name])
        )
    return tuple(sorted(classes, key=lambda c: (len(c.representative.edges), c.name)))


# ---------------------------------------------------------------------------
# Argument handling.


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--model",
        choices=("classical", "digraph", "relaxed", "custom"),
        default="classical",
    )
    shared.add_argument("--edges", help="edge list i>j,k>l (digraph/custom models)")
    shared.add_argument("--distance", type=int, help="placement distance C")
    shared.add_argument("--n", type=int, help="disc count (or table/sweep bound)")
    shared.add_argument("--from", dest="src", type=int, default=1)
    shared.add_argument("--to", dest="tgt", type=int, default=2)
    shared.add_argument("--format", choices=("plain", "csv", "json"), default=None)
    shared.add_argument("--max-states", type=int, default=DEFAULT_STATE_BUDGET)

    parser = argparse.ArgumentParser(
        prog="hanoilab",
        description="Generalized Tower of Hanoi laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", parents=[shared], help="emit a move sequence")
    p_solve.add_argument(
        "--solver",
        choices=("auto", "classical", "directed", "zeta", "symmetric", "q", "bfs"),
        default="auto",
    )
    p_solve.set_defaults(func=cmd_solve)

    p_table = sub.add_parser(
        "table", parents=[shared], help="exact move-count table for a digraph"
    )
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", parents=[shared], help="run a harness suite")
    p_verify.add_argument("--suite", choices=("graphs", "relaxed", "claims"), required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser(
        "conjecture", parents=[shared], help="probe the conjectured optima"
    )
    p_conj.add_argument("--n-max", dest="n_max", type=int, default=7)
    p_conj.set_defaults(func=cmd_conjecture)

    p_graphs = sub.add_parser(
        "graphs", parents=[shared], help="enumerate strongly connected digraphs"
    )
    p_graphs.add_argument("action", nargs="?", choices=("enumerate",), default="enumerate")
    p_graphs.set_defaults(func=cmd_graphs)

    return parser


def _fmt(args: argparse.Namespace, default: str = "plain") -> str:
    return args.format if args.format is not None else default


def _build_model(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Model:
    needs_edges = args.model in ("digraph", "custom")
    if needs_edges and not args.edges:
        parser.error(f"--edges is required for --model {args.model}")
    if not needs_edges and args.edges:
        parser.error("--edges is only valid with --model digraph or custom")
    needs_distance = args.model in ("relaxed", "custom")
    if needs_distance and args.distance is None:
        parser.error(f"--distance is required for --model {args.model}")
    if not needs_distance and args.distance is not None:
        parser.error("--distance is only valid with --model relaxed or custom")
    if args.model == "relaxed" and args.distance < 1:
        parser.error("--distance must be >= 1 for the relaxed model")
    if args.model == "custom" and args.distance < 0:
        parser.error("--distance must be >= 0")
    if needs_edges:
        try:
            graph = MoveGraph.parse(args.edges)
        except ValueError as err:
            parser.error(str(err))
        if not graph.is_strongly_connected():
            parser.error("--edges must describe a strongly connected graph")
    else:
        graph = MoveGraph.complete()
    return Model(graph, args.distance if needs_distance else 0)


def _check_pegs(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.src not in (1, 2, 3) or args.tgt not in (1, 2, 3):
        parser.error("--from/--to must be pegs in 1..3")
    if args.src == args.tgt:
        parser.error("--from and --to must differ")


# ---------------------------------------------------------------------------
# solve


def cmd_solve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.n is None or args.n < 0:
        parser.error("solve requires --n >= 0")
    _check_pegs(parser, args)
    model = _build_model(parser, args)
    n, src, tgt = args.n, args.src, args.tgt

    solver = args.solver
    if solver == "auto":
        solver = {
            "classical": "classical",
            "digraph": "directed",
            "relaxed": "symmetric",
            "custom": "bfs",
        }[args.model]
    goal = "all-on-target" if solver == "zeta" else "standard"
    if solver == "classical":
        if args.model != "classical":
            parser.error("--solver classical requires the classical model")
        moves = classical_solve(n, src, tgt)
    elif solver == "directed":
        if model.distance != 0:
            parser.error("--solver directed requires distance 0")
        moves = directed_move(model.graph, src, tgt, n)
    elif solver in ("zeta", "symmetric", "q"):
        if model.distance < 1 or model.graph != MoveGraph.complete():
            parser.error(f"--solver {solver} requires the relaxed model")
        fn = {"zeta": zeta, "symmetric": a_symmetric, "q": q_sequence}[solver]
        moves = fn(n, model.distance, src, tgt)
    else:  # bfs
        result = bfs_distance(
            model,
            standard_state(n, src),
            GoalPredicate.standard_on(tgt),
            max_states=args.max_states,
        )
        moves = list(result.path or ())

    # a printed sequence must replay cleanly; refuse to emit otherwise
    final = apply_all(model, standard_state(n, src), moves)
    if goal == "standard":
        assert final == standard_state(n, tgt)
    else:
        assert all(not final.stacks[p - 1] for p in (1, 2, 3) if p != tgt)

    fmt = _fmt(args)
    if fmt == "plain":
        for move in moves:
            print(move)
        print(f"length: {len(moves)}")
    elif fmt == "csv":
        print("index,from,to")
        for index, move in enumerate(moves, start=1):
            print(f"{index},{move.src},{move.dst}")
    else:
        print(
            json.dumps(
                {
                    "model": args.model,
                    "solver": solver,
                    "n": n,
                    "from": src,
                    "to": tgt,
                    "goal": goal,
                    "length": len(moves),
                    "moves": [[m.src, m.dst] for m in moves],
                },
                sort_keys=True,
            )
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# table


def _closed_form_for(graph: MoveGraph):
    if graph == recurrence.COMPLETE_GRAPH:
        return "complete", lambda pair, n: 2**n - 1
    if graph == recurrence.CYCLE_GRAPH:
        return "cycle", lambda pair, n: recurrence.closed_form_cycle(pair, n).as_integer()
    if graph == recurrence.LINEAR_GRAPH:
        return "linear", recurrence.closed_form_linear
    if graph == recurrence.CHORD_GRAPH:
        return "cycle-chord", lambda pair, n: recurrence.closed_form_chord(pair, n).as_integer()
    return None


def cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.model not in ("classical", "digraph"):
        parser.error("table applies to distance-0 models (classical or digraph)")
    if args.n is None or args.n < 0:
        parser.error("table requires --n >= 0")
    model = _build_model(parser, args)
    table = recurrence.eval_move_counts(model.graph, args.n)

    closed = _closed_form_for(model.graph)
    closed_ok = None
    if closed is not None:
        name, formula = closed
        closed_ok = all(
            formula(pair, n) == table.value(pair, n)
            for pair in recurrence.PAIR_ORDER
            for n in range(args.n + 1)
        )

    header = "n,N12,N21,N13,N31,N23,N32"
    fmt = _fmt(args)
    if fmt in ("plain", "csv"):
        print(header)
        for n in range(args.n + 1):
            print(",".join(str(v) for v in (n, *table.row(n))))
        if fmt == "plain" and closed is not None:
            print(f"closed_form[{closed[0]}]: {'ok' if closed_ok else 'MISMATCH'}")
    else:
        print(
            json.dumps(
                {
                    "edges": model.graph.format(),
                    "n_max": args.n,
                    "rows": [
                        {"n": n, **dict(zip(("N12", "N21", "N13", "N31", "N23", "N32"), table.row(n)))}
                        for n in range(args.n + 1)
                    ],
                    "closed_form": None
                    if closed is None
                    else {"class": closed[0], "ok": closed_ok},
                },
                sort_keys=True,
            )
        )
    return EXIT_FAILURE if closed_ok is False else EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    if args.suite == "graphs":
        n_max = args.n if args.n is not None else 5
        if n_max < 1:
            parser.error("--n must be >= 1")
        rows = []
        ok = True
        for graph in all_strongly_connected_graphs():
            for n in range(1, n_max + 1):
                report = verify_optimality(graph, n, max_states=args.max_states)
                ok = ok and report.ok
                rows.append(report)
        if fmt == "csv":
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(["edges", "n", "pair", "bfs", "algorithm", "recurrence", "ok"])
            for report in rows:
                for check in report.checks:
                    writer.writerow(
                        [
                            report.graph.format(),
                            check.n,
                            f"{check.pair[0]}>{check.pair[1]}",
                            check.bfs,
                            check.algorithm,
                            check.recurrence,
                            check.ok,
                        ]
                    )
        elif fmt == "json":
            print(
                json.dumps(
                    {
                        "suite": "graphs",
                        "n_max": n_max,
                        "pass": ok,
                        "graphs": [
                            {
                                "edges": r.graph.format(),
                                "n": r.n,
                                "ok": r.ok,
                                "failures": [
                                    {
                                        "pair": list(c.pair),
                                        "bfs": c.bfs,
                                        "algorithm": c.algorithm,
                                        "recurrence": c.recurrence,
                                    }
                                    for c in r.failures()
                                ],
                            }
                            for r in rows
                        ],
                    },
                    sort_keys=True,
                )
            )
        else:
            graphs = all_strongly_connected_graphs()
            for graph in graphs:
                per_graph = [r for r in rows if r.graph == graph]
                status = "ok" if all(r.ok for r in per_graph) else "MISMATCH"
                print(f"graph {graph.format()}: n<={n_max} {status}")
            print(f"graphs suite: {'PASS' if ok else 'FAIL'} ({len(graphs)} graphs, n<={n_max})")
        return EXIT_OK if ok else EXIT_FAILURE

    if args.suite == "relaxed":
        params = {}
        if args.n is not None:
            params["n_max"] = args.n
        if args.distance is not None:
            params["distance"] = args.distance
        report = claim_harness("eq3-vs-oracle", params, max_states=args.max_states)
        return _emit_harness_reports([report], fmt)

    # claims
    overrides = {}
    if args.n is not None:
        overrides["n_max"] = args.n
    reports = [
        claim_harness("eq3-vs-oracle", {"n_max": overrides.get("n_max", 8)}, max_states=args.max_states),
        claim_harness("claim51-inequality", max_states=args.max_states),
        claim_harness("dn-negative", max_states=args.max_states),
        claim_harness("symmetric-odd", {"n_max": overrides.get("n_max", 7)}, max_states=args.max_states),
        claim_harness("symmetric-equals-a", {"n_max": overrides.get("n_max", 7)}, max_states=args.max_states),
    ]
    return _emit_harness_reports(reports, fmt)


def _emit_harness_reports(reports, fmt: str) -> int:
    ok = all(r.passed for r in reports)
    if fmt == "json":
        print("[" + ",".join(r.to_json() for r in reports) + "]")
    elif fmt == "csv":
        print("suite,pass,counterexamples")
        for r in reports:
            print(f"{r.suite},{r.passed},{len(r.counterexamples)}")
    else:
        for r in reports:
            print(f"{r.suite}: {'PASS' if r.passed else 'FAIL'}")
            for ce in r.counterexamples:
                print(f"  counterexample: {json.dumps(ce, sort_keys=True)}")
    return EXIT_OK if ok else EXIT_FAILURE


# ---------------------------------------------------------------------------
# conjecture


def cmd_conjecture(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.distance is None or args.distance < 1:
        parser.error("conjecture requires --distance >= 1")
    if args.edges:
        parser.error("conjecture runs on the complete graph; --edges is invalid")
    if args.n_max < 1:
        parser.error("--n-max must be >= 1")
    report = conjecture_probe(
        args.distance, args.n_max, src=args.src, tgt=args.tgt, max_states=args.max_states
    )
    fmt = _fmt(args, default="csv")
    if fmt == "csv":
        sys.stdout.write(report.to_csv())
    elif fmt == "json":
        print(
            json.dumps(
                {
                    "distance": report.distance,
                    "rows": [
                        {
                            "n": r.n,
                            "bfs_std": r.bfs_std,
                            "bfs_any": r.bfs_any,
                            "a_conj": r.a_conj,
                            "b_conj": r.b_conj,
                            "len_a_sym": r.len_a_sym,
                            "len_q": r.len_q,
                            "match": r.match,
                        }
                        for r in report.rows
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        for row in report.rows:
            print(
                f"n={row.n} bfs_std={row.bfs_std} bfs_any={row.bfs_any} "
                f"a_conj={row.a_conj} b_conj={row.b_conj} "
                f"len_a_sym={row.len_a_sym} len_q={row.len_q} "
                f"{'MATCH' if row.match else 'MISMATCH'}"
            )
    return EXIT_OK


# ---------------------------------------------------------------------------
# graphs


def cmd_graphs(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    classes = enumerate_graph_classes()
    fmt = _fmt(args)
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["class", "size", "representative", "note"])
        for c in classes:
            writer.writerow([c.name, c.size, c.representative.format(), c.note])
    elif fmt == "json":
        print(
            json.dumps(
                [
                    {
                        "class": c.name,
                        "size": c.size,
                        "representative": c.representative.format(),
                        "members": [g.format() for g in c.members],
                        "note": c.note,
                    }
                    for c in classes
                ],
                sort_keys=True,
            )
        )
    else:
        for c in classes:
            print(
                f"{c.name}: members={c.size} representative={c.representative.format()}"
                f" ({c.note})"
            )
        print(f"total: {len(classes)} classes, {sum(c.size for c in classes)} labeled graphs")
    return EXIT_OK


# ---------------------------------------------------------------------------


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except SearchCapExceeded as err:
        print(f"error: resource cap exceeded: {err}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
