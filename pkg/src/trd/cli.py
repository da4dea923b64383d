"""Command-line front end.

Exit codes: 0 success or pass, 1 verification failure or counterexample
found, 2 usage error (including unknown theorem/question identifiers),
3 input or solver error (malformed graph6, isolated vertices, exceeded
node budget, invalid family syntax).  Data goes to stdout as JSON (or
TSV with ``--format tsv``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families as fam
from .criticality import (
    classify_deltas,
    complete_to_critical,
    edge_delta,
    edge_profile,
)
from .errors import IsolatedVertexError, TrdError, UnknownQuestionError, UnknownTheoremError
from .graphs import (
    Graph,
    graph6_decode,
    graph6_encode,
    metrics,
    parse_edge_list,
)
from .solver import classical_numbers, gamma_tr, gamma_tr_value
from .verify import (
    AllLabeled,
    Families,
    InstanceUniverse,
    RandomGnp,
    VerificationReport,
    hunt_counterexamples,
    parallel_map,
    run_registry,
    verify_theorem,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines)


def _load_graph(args) -> tuple[Graph, fam.FamilySpec | None]:
    if args.graph6 is not None:
        return graph6_decode(args.graph6), None
    if args.edges is not None:
        return parse_edge_list(Path(args.edges).read_text()), None
    spec = fam.parse_family(args.family)
    return fam.generate(spec), spec


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload))
        return
    # TSV: reports become one row each, plain objects become key/value rows
    rows = payload if isinstance(payload, list) else [payload]
    for row in rows:
        if "theorem_id" in row:
            print(
                f"{row['theorem_id']}\t{row['instances_checked']}"
                f"\t{row['outcome']}\t{len(row['counterexamples'])}"
            )
        else:
            for key, value in row.items():
                print(f"{key}\t{json.dumps(value)}")


def _universe_from_args(args) -> InstanceUniverse | None:
    if args.all_labeled is not None:
        return AllLabeled(
            args.all_labeled,
            connected_only=args.connected,
            no_isolated=not args.allow_isolated,
        )
    if args.random is not None:
        parts = args.random.split(",")
        if len(parts) != 3:
            raise TrdError(f"--random wants count,n,p, got {args.random!r}")
        return RandomGnp(int(parts[0]), int(parts[1]), float(parts[2]), args.seed)
    if args.family:
        return Families(tuple(fam.parse_family(t) for t in args.family))
    return None


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", help="short-form graph6 string")
    group.add_argument("--edges", help="edge-list file ('n m' header)")
    group.add_argument("--family", help="family descriptor, e.g. spider(2,2,4)")


def _add_universe_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--all-labeled", type=int, metavar="N",
                   help="all labelled graphs of order up to N (N <= 7)")
    p.add_argument("--connected", action="store_true",
                   help="restrict --all-labeled to connected graphs")
    p.add_argument("--allow-isolated", action="store_true",
                   help="keep graphs with isolated vertices in --all-labeled")
    p.add_argument("--random", metavar="COUNT,N,P",
                   help="seeded G(n,p) samples")
    p.add_argument("--family", action="append", metavar="SPEC",
                   help="family universe member (repeatable)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trd",
        description="total Roman domination workbench",
    )
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for --random universes (default 0)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel map width for verify/hunt/profile")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of one graph")
    _add_input_flags(p)
    p.add_argument("--budget", type=int, help="solver node budget")

    p = sub.add_parser("profile", help="per-non-edge gamma_tR deltas")
    _add_input_flags(p)

    p = sub.add_parser("classify", help="criticality classification")
    _add_input_flags(p)

    p = sub.add_parser("generate", help="emit a family member as graph6")
    p.add_argument("--family", required=True)
    p.add_argument("--dot", action="store_true", help="also emit DOT")

    p = sub.add_parser("recognize", help="structural recognition report")
    _add_input_flags(p)

    p = sub.add_parser("verify", help="machine-check registered theorems")
    p.add_argument("theorem", nargs="?", metavar="THEOREM_ID",
                   help="registry id; omit to run the whole registry")
    _add_universe_flags(p)

    p = sub.add_parser("hunt", help="search for open-question counterexamples")
    p.add_argument("question", choices=("Q1", "Q2", "Q1_supercritical",
                                        "Q2_dead_in_critical"))
    _add_universe_flags(p)

    p = sub.add_parser("complete-critical",
                       help="grow a graph to an edge-critical supergraph")
    _add_input_flags(p)
    p.add_argument("--dot", action="store_true", help="also emit DOT")
    return parser


def _cmd_compute(args) -> int:
    g, _ = _load_graph(args)
    result = gamma_tr(g, node_budget=args.budget)
    gamma, gamma_t, gamma_r = classical_numbers(g)
    _emit(
        {
            "graph6": graph6_encode(g),
            "n": g.n,
            "gamma": gamma,
            "gamma_t": gamma_t,
            "gamma_R": gamma_r,
            "gamma_tR": result.value,
            "witness": list(result.witness.values),
            "nodes_explored": result.nodes_explored,
        },
        args.format,
    )
    return EXIT_OK


def _delta_worker(payload: tuple[str, int, int]) -> int:
    g6, u, v = payload
    return edge_delta(graph6_decode(g6), u, v)


def _cmd_profile(args) -> int:
    g, _ = _load_graph(args)
    if args.jobs > 1:
        if g.has_isolated_vertices():
            raise IsolatedVertexError("edge profiles need no isolated vertices")
        g6 = graph6_encode(g)
        non_edges = g.non_edges()
        payloads = [(g6, u, v) for u, v in non_edges]
        deltas = dict(
            zip(non_edges, parallel_map(_delta_worker, payloads, args.jobs))
        )
        base = gamma_tr_value(g)
        classification = classify_deltas(deltas)
    else:
        profile = edge_profile(g)
        base = profile.base_value
        deltas = profile.deltas
        classification = profile.classification
    _emit(
        {
            "graph6": graph6_encode(g),
            "base_value": base,
            "classification": classification,
            "deltas": [
                {"u": u, "v": v, "delta": d} for (u, v), d in deltas.items()
            ],
        },
        args.format,
    )
    return EXIT_OK


def _cmd_classify(args) -> int:
    g, _ = _load_graph(args)
    profile = edge_profile(g)
    _emit(
        {
            "graph6": graph6_encode(g),
            "base_value": profile.base_value,
            "classification": profile.classification,
        },
        args.format,
    )
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = fam.parse_family(args.family)
    g = fam.generate(spec)
    payload = {
        "family": fam.family_to_text(spec),
        "graph6": graph6_encode(g),
        "n": g.n,
        "edges": g.edge_count,
    }
    if args.dot:
        payload["dot"] = _to_dot(g)
    _emit(payload, args.format)
    return EXIT_OK


def _cmd_recognize(args) -> int:
    g, _ = _load_graph(args)
    info = metrics(g)
    connected = info.connected
    hen1 = None
    if connected and g.n >= 2:
        hen1 = fam.hen1_classify(g)
    predicts = None
    if connected and g.n >= 4:
        predicts = fam.predict_n_critical(g)
    from .graphs import complement as _complement

    _emit(
        {
            "graph6": graph6_encode(g),
            "n": g.n,
            "connected": connected,
            "hen1_class": hen1.kind if hen1 else None,
            "hen1_r": hen1.r if hen1 else None,
            "is_galaxy": fam.is_galaxy(g),
            "complement_is_galaxy": fam.is_galaxy(_complement(g)),
            "predicts_n_critical": predicts,
            "universal_vertex": info.universal_vertex,
            "diameter": info.diameter,
        },
        args.format,
    )
    return EXIT_OK


def _report_exit(reports: list[VerificationReport]) -> int:
    return EXIT_OK if all(r.outcome == "pass" for r in reports) else EXIT_FAIL


def _cmd_verify(args) -> int:
    universe = _universe_from_args(args)
    if args.theorem is None:
        reports = run_registry(jobs=args.jobs)
    else:
        reports = [verify_theorem(args.theorem, universe, jobs=args.jobs)]
    payload = [r.to_json() for r in reports]
    _emit(payload if args.theorem is None else payload[0], args.format)
    return _report_exit(reports)


def _cmd_hunt(args) -> int:
    question = {
        "Q1": "Q1_supercritical",
        "Q2": "Q2_dead_in_critical",
    }.get(args.question, args.question)
    report = hunt_counterexamples(question, _universe_from_args(args),
                                  jobs=args.jobs)
    _emit(report.to_json(), args.format)
    return _report_exit([report])


def _cmd_complete_critical(args) -> int:
    g, _ = _load_graph(args)
    h = complete_to_critical(g)
    added = sorted(set(h.edges()) - set(g.edges()))
    profile = edge_profile(h)
    payload = {
        "input_graph6": graph6_encode(g),
        "graph6": graph6_encode(h),
        "gamma_tR": profile.base_value,
        "added_edges": [[u, v] for u, v in added],
        "classification": profile.classification,
    }
    if args.dot:
        payload["dot"] = _to_dot(h)
    _emit(payload, args.format)
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "profile": _cmd_profile,
    "classify": _cmd_classify,
    "generate": _cmd_generate,
    "recognize": _cmd_recognize,
    "verify": _cmd_verify,
    "hunt": _cmd_hunt,
    "complete-critical": _cmd_complete_critical,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UnknownTheoremError, UnknownQuestionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TrdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
