"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 undefined computation (an
infinite distance is needed, or a whole-graph command on a graph that is
not strongly connected).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import graph_io
from .curvature import (
    CONDITIONS,
    alpha_ricci,
    check_condition,
    curvature_report,
    ricci,
    ricci_upper_bound,
    transport_between,
)
from .errors import UndefinedComputation, ValidationError
from .families import (
    binary_tree,
    caterpillar_tree,
    circulant,
    cycle_product,
    directed_cycle,
    oriented_complete,
    rooted_in_tree,
    star_tree,
)
from .graph import DEGREE_CONVENTIONS, UNION, format_distance, shortest_distances
from .measure import build_walk_measure
from .scalar import ONE_MINUS_EPSILON, format_rational, format_scalar, parse_rational

CONDITION_TAGS = {"a": CONDITIONS[0], "outdeg": CONDITIONS[1], "phi": CONDITIONS[2], "b": CONDITIONS[3]}
REPORT_FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _alpha(text: str):
    if text == "limit":
        return "limit"
    try:
        alpha = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not 0 <= alpha <= 1:
        raise argparse.ArgumentTypeError(f"alpha={alpha} is outside [0, 1]")
    return alpha


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--degree-convention",
        choices=DEGREE_CONVENTIONS,
        default=UNION,
        help="'split' allows anti-parallel pairs and uses d = d_in + d_out",
    )
    common.add_argument("--graph-format", choices=graph_io.FORMATS, help="override format detection")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    report = argparse.ArgumentParser(add_help=False)
    report.add_argument("--format", choices=REPORT_FORMATS, default="table")

    p = _Parser(prog="digraph-ricci", description="Ricci curvature of directed graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate a graph file")
    g.add_argument("family", choices=["cycle", "complete", "product", "circulant", "tree"])
    g.add_argument("params", nargs="+", help="cycle N | complete N | product G H | circulant N S.. | "
                   "tree star K | tree caterpillar SPINE [LEGS] | tree binary DEPTH")

    d = sub.add_parser("distances", parents=[common, report], help="all-pairs hop distances")
    d.add_argument("graph")

    m = sub.add_parser("measure", parents=[common, report], help="lazy walk measure at x")
    m.add_argument("graph")
    m.add_argument("x", type=int)
    m.add_argument("--alpha", type=_alpha, required=True)

    w = sub.add_parser("wasserstein", parents=[common, report], help="transport between m_x and m_y")
    w.add_argument("graph")
    w.add_argument("x", type=int)
    w.add_argument("y", type=int)
    w.add_argument("--alpha", type=_alpha, required=True)

    c = sub.add_parser("curvature", parents=[common, report], help="edge or pair curvature")
    c.add_argument("graph")
    c.add_argument("--pair", nargs=2, type=int, metavar=("X", "Y"))
    c.add_argument("--alpha", type=_alpha, default="limit")

    b = sub.add_parser("bound", parents=[common, report], help="upper bound on kappa(x, y)")
    b.add_argument("graph")
    b.add_argument("x", type=int)
    b.add_argument("y", type=int)

    k = sub.add_parser("check", parents=[common, report], help="flatness conditions")
    k.add_argument("graph")
    k.add_argument("--condition", required=True, choices=sorted(CONDITION_TAGS) + ["flat"])

    sub.add_parser("verify", help="run the built-in example fixtures")
    return p


def _generate(family: str, params: List[str]):
    try:
        if family == "tree":
            shape, *rest = params
            nums = [int(t) for t in rest]
            makers = {"star": star_tree, "caterpillar": caterpillar_tree, "binary": binary_tree}
            if shape not in makers:
                raise UsageError(f"unknown tree shape {shape!r}; expected star, caterpillar or binary")
            return rooted_in_tree(makers[shape](*nums))
        nums = [int(t) for t in params]
    except ValueError:
        raise UsageError(f"non-integer parameter in {params}") from None
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    if family == "cycle" and len(nums) == 1:
        return directed_cycle(nums[0])
    if family == "complete" and len(nums) == 1:
        return oriented_complete(nums[0])
    if family == "product" and len(nums) == 2:
        return cycle_product(*nums)
    if family == "circulant" and len(nums) >= 2:
        return circulant(nums[0], nums[1:])
    raise UsageError(f"wrong parameters for {family}: {params}")


def _emit(text: str, args) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args):
    return graph_io.load(args.graph, args.graph_format, args.degree_convention)


def _alpha_value(alpha):
    return ONE_MINUS_EPSILON if alpha == "limit" else alpha


def _render(payload: dict, table: str, fmt: str, csv_text: Optional[str] = None) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "csv" and csv_text is not None:
        return csv_text
    return table


def run(args) -> int:
    cmd = args.command
    if cmd == "verify":
        from .verification import run_all

        return 1 if run_all() else 0

    if cmd == "gen":
        G = _generate(args.family, args.params)
        fmt = args.graph_format or (graph_io.guess_format(args.output) if args.output else "edgelist")
        text = graph_io.dumps(G, fmt)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0

    G = _load(args)
    fmt = args.format

    if cmd == "distances":
        rows = [[format_distance(d) for d in shortest_distances(G, s)] for s in range(G.n)]
        table = "\n".join(" ".join(r) for r in rows)
        csv_text = "\n".join(",".join(r) for r in rows)
        _emit(_render({"distances": rows}, table, fmt, csv_text), args)
        return 0

    if cmd == "measure":
        mu = build_walk_measure(G, args.x, _alpha_value(args.alpha))
        payload = {"vertex": args.x, "alpha": str(args.alpha), "masses": {str(v): format_scalar(p) for v, p in mu.items()}}
        csv_text = "vertex,mass\n" + "\n".join(f"{v},{format_scalar(p)}" for v, p in mu.items())
        _emit(_render(payload, mu.format_lines(), fmt, csv_text), args)
        return 0

    if cmd == "wasserstein":
        res = transport_between(G, args.x, args.y, _alpha_value(args.alpha))
        payload = {
            "value": format_scalar(res.value),
            "coupling": [[u, v, format_scalar(m)] for (u, v), m in sorted(res.coupling.items())],
            "potential": {str(z): format_scalar(f) for z, f in sorted(res.potential.items())},
        }
        _emit(_render(payload, res.describe(), fmt), args)
        return 0

    if cmd == "curvature":
        if args.pair:
            x, y = args.pair
            k = ricci(G, x, y) if args.alpha == "limit" else alpha_ricci(G, x, y, args.alpha)
            payload = {"u": x, "v": y, "alpha": str(args.alpha), "kappa": format_rational(k)}
            csv_text = f"u,v,kappa_num,kappa_den,kappa_decimal\n{x},{y},{k.numerator},{k.denominator},{float(k):.12g}"
            _emit(_render(payload, format_rational(k), fmt, csv_text), args)
            return 0
        if args.alpha == "limit":
            rep = curvature_report(G)
            _emit(_render(rep.to_dict(), rep.to_table(), fmt, rep.to_csv()), args)
            return 0
        from .curvature import CurvatureReport, _require_strong

        _require_strong(G, "curvature")
        rep = CurvatureReport({(u, v): alpha_ricci(G, u, v, args.alpha) for u, v in G.edges})
        _emit(_render(rep.to_dict(), rep.to_table(), fmt, rep.to_csv()), args)
        return 0

    if cmd == "bound":
        q = ricci_upper_bound(G, args.x, args.y)
        _emit(_render({"u": args.x, "v": args.y, "bound": format_rational(q)}, format_rational(q), fmt), args)
        return 0

    if cmd == "check":
        if args.condition == "flat":
            rep = curvature_report(G)
            payload = {"condition": "flat", "holds": rep.is_ricci_flat,
                       "witnesses": [[u, v, format_rational(k)] for (u, v), k in rep.per_edge.items() if k != 0]}
            _emit(_render(payload, f"ricci_flat: {str(rep.is_ricci_flat).lower()}", fmt), args)
            return 0
        verdict = check_condition(G, CONDITION_TAGS[args.condition])
        d = verdict.to_dict()
        table = f"{d['condition']}: {str(d['holds']).lower()}"
        if d["witnesses"]:
            table += "\nwitnesses:\n" + "\n".join(f"  {w}" for w in d["witnesses"])
        _emit(_render(d, table, fmt), args)
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args)
    except (ValidationError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UndefinedComputation as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
