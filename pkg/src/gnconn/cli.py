"""Command-line interface: compute, generate, verify, extremal, enumerate.

All output is reproducible: there is no randomness anywhere, and the worker
count (--threads or GNC_THREADS) never changes results, only wall time.
Exit codes for `compute`: 0 on a value, 2 when the requested connectivity
does not exist, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .codec import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, parse_graph_auto
from .enumeration import enumerate_graphs
from .extremal import f_search, g_search, s_search
from .families import FAMILY_TAGS, FamilyParameterError, instantiate
from .graph import Graph, GraphError, components_after_removal, kappa_classical, lambda_classical
from .solver import NotExistReason, kappa_extra, kappa_gnc, lambda_extra
from .verify import SUITES, run_all, run_suite

_EXIT_OK = 0
_EXIT_ERROR = 1
_EXIT_NOT_EXIST = 2


def _threads(args: argparse.Namespace) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("GNC_THREADS", "")
    if env.isdigit() and int(env) > 0:
        return int(env)
    return 1


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _read_graph(args: argparse.Namespace) -> Graph:
    if args.g6 is not None:
        text = args.g6
    elif args.file is not None:
        with open(args.file, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    fmt = args.format
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    if fmt == "edgelist":
        return parse_edge_list(text)
    return parse_graph_auto(text)


def _component_docs(G: Graph, removed: tuple[int, ...]) -> list[dict]:
    summary = components_after_removal(G, removed)
    return [{"size": c.size, "minDegree": c.min_degree} for c in summary.components]


def _cmd_compute(args: argparse.Namespace) -> int:
    G = _read_graph(args)
    g = args.g
    kind = args.kind
    doc: dict = {"n": G.n, "g": g if kind in ("gnc", "extra", "edge-extra") else None,
                 "kind": kind, "value": None, "reason": None,
                 "certificate": None, "components": []}
    exists = False
    if kind in ("gnc", "extra"):
        res = kappa_gnc(G, g) if kind == "gnc" else kappa_extra(G, g)
        exists = res.exists
        doc["value"] = res.value
        doc["reason"] = res.reason.value if res.reason else None
        if res.exists:
            doc["certificate"] = list(res.certificate)
            doc["components"] = _component_docs(G, res.certificate)
    elif kind == "edge-extra":
        res = lambda_extra(G, g)
        exists = res.exists
        doc["value"] = res.value
        doc["reason"] = res.reason.value if res.reason else None
        if res.exists:
            doc["edges"] = [list(e) for e in res.edges]
            rows = list(G.rows)
            for u, v in res.edges:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            doc["components"] = _component_docs(Graph.from_rows(G.n, tuple(rows)), ())
    elif kind == "kappa":
        value = kappa_classical(G)
        exists = value is not None
        doc["value"] = value
        if value is None:
            doc["reason"] = NotExistReason.COMPLETE_GRAPH.value
        elif value == 0:
            doc["reason"] = NotExistReason.DISCONNECTED_INPUT.value
    else:  # lambda
        value = lambda_classical(G)
        exists = True
        doc["value"] = value

    if args.json:
        print(_dump(doc))
    else:
        if exists:
            print(f"{kind} value: {doc['value']}")
            if doc.get("certificate"):
                print("certificate:", " ".join(str(v) for v in doc["certificate"]))
            if doc.get("edges"):
                print("edge cut:", " ".join(f"{u}-{v}" for u, v in doc["edges"]))
            if doc["components"]:
                parts = "; ".join(f"size={c['size']} minDegree={c['minDegree']}"
                                  for c in doc["components"])
                print("components:", parts)
        else:
            print(f"{kind} does not exist: {doc['reason']}")
    return _EXIT_OK if exists else _EXIT_NOT_EXIST


def _cmd_generate(args: argparse.Namespace) -> int:
    params: dict = {}
    for name in ("n", "t", "k", "g", "a", "b"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.f1_order is not None:
        params["f1_order"] = args.f1_order
    if args.parts is not None:
        params["parts"] = [int(p) for p in args.parts.split(",") if p.strip()]
    instances = instantiate(args.family, **params)
    emit = emit_graph6 if args.format == "graph6" else emit_edge_list
    sidecar = {
        "family": args.family,
        "instances": [inst.expected_json() | {"graph6": emit_graph6(inst.graph)}
                      for inst in instances],
    }
    if args.json:
        print(_dump(sidecar))
    else:
        for inst in instances:
            out = emit(inst.graph)
            print(out if out.endswith("\n") else out, end="" if out.endswith("\n") else "\n")
    if args.sidecar:
        with open(args.sidecar, "w", encoding="ascii") as fh:
            fh.write(_dump(sidecar) + "\n")
    return _EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    threads = _threads(args)
    if args.suite == "all":
        reports = run_all(max_n=args.max_n, threads=threads)
    else:
        reports = [run_suite(args.suite, max_n=args.max_n, threads=threads)]
    if args.json:
        print(_dump({"reports": [r.to_json_dict() for r in reports]}))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.suite:20s} maxN={r.max_n:<3d} checked={r.checked:<7d} "
                  f"failures={len(r.failures):<4d} {status}")
            for failure in r.failures[:20]:
                print("  failure:", json.dumps(failure, sort_keys=True))
            if len(r.failures) > 20:
                print(f"  ... {len(r.failures) - 20} more failures")
            for note in r.notes:
                print("  note:", note)
    return _EXIT_OK if all(r.passed for r in reports) else _EXIT_ERROR


def _cmd_extremal(args: argparse.Namespace) -> int:
    corpus = None
    if args.corpus:
        corpus = []
        with open(args.corpus, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    corpus.append(parse_graph6(line))
    fn = {"s": s_search, "f": f_search, "g": g_search}[args.fn]
    report = fn(args.n, args.k, args.g, corpus=corpus, threads=_threads(args))
    if args.json:
        print(_dump(report.to_json_dict()))
    else:
        print(f"{args.fn}({args.n},{args.k}) at g={args.g}:")
        print(f"  searched: {report.searched_value}")
        note = f"  ({report.formula_note})" if report.formula_note else ""
        print(f"  formula:  {report.formula_value}{note}")
        print(f"  match:    {report.match}")
        print(f"  scanned:  {report.graphs_scanned} graphs in {report.elapsed:.2f}s")
        for w in report.witnesses:
            print(f"  witness:  {w}")
    return _EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    stream = enumerate_graphs(
        args.n,
        connected_only=args.connected,
        dedupe_iso=args.dedupe_iso,
        edge_min=args.edge_min,
        edge_max=args.edge_max,
    )
    if args.count:
        print(sum(1 for _ in stream))
        return _EXIT_OK
    for G in stream:
        print(emit_graph6(G))
    return _EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gnconn",
        description="Exact good-neighbor connectivity toolkit for small simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="connectivity of one input graph")
    p.add_argument("--g6", help="graph6 record given inline")
    p.add_argument("--file", help="path to a graph6 or edge-list file")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--g", type=int, default=0, help="good-neighbor parameter (default 0)")
    p.add_argument("--kind", choices=("gnc", "extra", "edge-extra", "kappa", "lambda"),
                   default="gnc")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("generate", help="emit a named family instance")
    p.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--f1-order", type=int, dest="f1_order")
    p.add_argument("--parts", help="comma-separated part sizes, e.g. 2,2,3")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--json", action="store_true",
                   help="print graphs plus the expected-values sidecar as one JSON doc")
    p.add_argument("--sidecar", help="also write the sidecar JSON to this path")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True, choices=tuple(sorted(SUITES)) + ("all",))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--threads", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extremal", help="extremal edge-count search vs closed form")
    p.add_argument("--fn", required=True, choices=("s", "f", "g"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--corpus", help="graph6 file replacing internal enumeration")
    p.add_argument("--threads", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("enumerate", help="stream small graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--dedupe-iso", action="store_true", dest="dedupe_iso")
    p.add_argument("--edge-min", type=int, dest="edge_min")
    p.add_argument("--edge-max", type=int, dest="edge_max")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, FamilyParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
