"""Command-line front end.

    invgraphs classify  [GRAPH | --input PATH|-] [--format json|text]
    invgraphs invert    [GRAPH | --input PATH|-] [--format dot|json]
    invgraphs enumerate --n N [--format text|json]
    invgraphs table     --n N [--format text|json]
    invgraphs relations --n N [--format text|json]

GRAPH is graph6 text or an edge list ("u v" per line, 1-based, an optional
lone integer line giving the vertex count); the two are told apart by
content.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import linalg
from .enumeration import UnsupportedSizeError, census, unique_pm_graphs
from .graph import GraphError, SimpleGraph, from_graph6, to_dot, to_graph6
from .invertibility import NotInvertibleError, classify, inverse_graph

FORMAT_VERSION = "1"
CENSUS_SIZES = (2, 4, 6)


class InputError(ValueError):
    pass


def parse_graph(text: str) -> SimpleGraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty graph input")
    tokens = [ln.split() for ln in lines]
    if all(all(t.lstrip("-").isdigit() for t in tk) for tk in tokens):
        n = None
        edges = []
        for tk in tokens:
            if len(tk) == 1 and n is None and not edges:
                n = int(tk[0])
            elif len(tk) == 2:
                edges.append((int(tk[0]), int(tk[1])))
            else:
                raise InputError(f"bad edge-list line: {' '.join(tk)!r}")
        if n is None:
            n = max((max(e) for e in edges), default=0)
        return SimpleGraph.from_edges(n, edges)
    if len(lines) != 1:
        raise InputError("expected a single graph6 line")
    return from_graph6(lines[0])


def _read_graph(args) -> SimpleGraph:
    if args.graph is not None and args.input is not None:
        raise InputError("give either GRAPH or --input, not both")
    if args.input == "-":
        text = sys.stdin.read()
    elif args.input is not None:
        with open(args.input) as fh:
            text = fh.read()
    elif args.graph is not None:
        text = args.graph
    else:
        raise InputError("no graph given")
    return parse_graph(text)


def _report(command: str, payload: dict, **extra) -> str:
    return json.dumps({"version": FORMAT_VERSION, "command": command, **extra, **payload},
                      sort_keys=True, indent=2)


def _signing_text(d):
    return "absent" if d is None else "(" + ", ".join(str(x) for x in d) + ")"


def cmd_classify(args) -> str:
    g = _read_graph(args)
    c = classify(g)
    if args.format == "json":
        return _report("classify", {"classification": c.to_dict()}, input=to_graph6(g))
    return "\n".join([
        f"graph        {to_graph6(g)}  edges {g.edges()}",
        f"det          {c.det}",
        f"integral     {c.integral}",
        f"bipartite    {c.bipartite}",
        f"nonnegative  {_signing_text(c.positive_signing)}",
        f"nonpositive  {_signing_text(c.negative_signing)}",
        f"verdict      {c.verdict}",
    ])


def cmd_invert(args) -> str:
    g = _read_graph(args)
    inv = inverse_graph(g)
    if args.format == "dot":
        head = f"// sign {inv.sign:+d} signing {_signing_text(inv.signing)}\n"
        return head + to_dot(inv.graph, "inverse").rstrip("\n")
    return _report("invert", {
        "weights": linalg.matrix_to_jsonable(inv.graph.weights),
        "signing": list(inv.signing),
        "sign": inv.sign,
        "loops": {str(k): v for k, v in inv.graph.loops().items()},
        "multi_edges": [[u, v, w] for (u, v), w in inv.graph.multi_edges().items()],
    }, input=to_graph6(g))


def _need_census_n(n):
    if n not in CENSUS_SIZES:
        raise UnsupportedSizeError(f"--n must be one of {CENSUS_SIZES}, got {n}")


def cmd_enumerate(args) -> str:
    _need_census_n(args.n)
    gs = [to_graph6(g) for g in unique_pm_graphs(args.n)]
    if args.format == "json":
        return _report("enumerate", {"n": args.n, "graphs": gs})
    return "\n".join(gs)


def cmd_table(args) -> str:
    _need_census_n(args.n)
    c = census(args.n)
    if args.format == "json":
        d = c.to_dict()
        return _report("table", {"n": c.n, "counts": d["counts"],
                                 "rows": [{k: r[k] for k in ("index", "graph6", "det", "bipartite", "verdict")}
                                          for r in d["graphs"]]})
    lines = [f"{'Graph':<10}| invertibility", "=" * 48]
    for i, (g, cl) in enumerate(c.graphs):
        lines.append(f"{i + 1:>3} {to_graph6(g):<6}| {cl.verdict}" + (f" (det {cl.det})" if cl.det not in (1, -1) else ""))
    lines.append("=" * 48)
    lines += [f"{k:<17} {v}" for k, v in c.counts.items()]
    return "\n".join(lines)


def cmd_relations(args) -> str:
    _need_census_n(args.n)
    c = census(args.n)
    d = c.to_dict()
    keys = ("selfinvertible", "self_contained", "mutual_pairs", "maximal_self", "maximal_mutual",
            "isospectral_pairs")
    if args.format == "json":
        verdicts = {r["index"]: r["verdict"] for r in d["graphs"]}
        return _report("relations", {"n": c.n, "verdicts": {str(k): v for k, v in verdicts.items()},
                                     **{k: d[k] for k in keys}})
    lines = [f"{r['index']:>3} {r['graph6']:<6} {r['verdict']}" for r in d["graphs"]]
    lines.append("")
    lines += [f"{k:<18} {d[k]}" for k in keys]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invgraphs", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, fmts in (("classify", cmd_classify, ("json", "text")),
                           ("invert", cmd_invert, ("dot", "json"))):
        s = sub.add_parser(name)
        s.add_argument("graph", nargs="?", help="graph6 string or edge list")
        s.add_argument("--input", help="path to a graph file, or - for stdin")
        s.add_argument("--format", choices=fmts, default=fmts[0])
        s.set_defaults(func=fn)

    for name, fn in (("enumerate", cmd_enumerate), ("table", cmd_table), ("relations", cmd_relations)):
        s = sub.add_parser(name)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--format", choices=("text", "json"), default="text")
        s.set_defaults(func=fn)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except NotInvertibleError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (InputError, GraphError, UnsupportedSizeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
