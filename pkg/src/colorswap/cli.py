"""Command-line front end: solve, kernelize, reduce, gen.

Exit codes: 0 YES (or success for transformations), 1 NO, 2 error,
3 overflow / inconclusive.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from .cographs import build_cotree, solve_crcs_cograph
from .core import Instance, solve_k_le_2
from .errors import BudgetExceededError, ColorSwapError, ParseError
from .formats import parse_cotree, parse_instance, serialize_instance
from .generators import (
    gen_cograph,
    gen_path_graph,
    gen_random_graph,
    gen_split_graph,
    greedy_color_count,
    random_instance,
)
from .oracle import DEFAULT_BUDGET, SearchBudget, crcs_reachable, ecrcs_reachable
from .paths import path_order, solve_path
from .reductions import (
    GadgetLayout,
    NCLInstance,
    SVRInstance,
    TokenSlidingInstance,
    ncl_to_3crcs,
    svr_to_kcrcs,
    ts_bipartite_to_crcs,
    ts_split_to_crcs,
)
from .splitgraphs import kernelize, solve_split, split_partition

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_OVERFLOW = 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _is_path(instance: Instance) -> bool:
    try:
        path_order(instance.graph)
        return True
    except ColorSwapError:
        return False


def _is_cograph(instance: Instance) -> bool:
    try:
        build_cotree(instance.graph)
        return True
    except ColorSwapError:
        return False


def _is_split(instance: Instance) -> bool:
    try:
        split_partition(instance.graph)
        return True
    except ColorSwapError:
        return False


def _pick_solver(instance: Instance) -> str:
    if instance.extended:
        return "cograph" if _is_cograph(instance) else "oracle"
    if instance.k <= 2:
        return "k2"
    if instance.k == 3 and _is_path(instance):
        return "path"
    if _is_cograph(instance):
        return "cograph"
    if _is_split(instance):
        return "split"
    return "oracle"


def cmd_solve(args) -> int:
    obj = parse_instance(_read(args.file))
    if not isinstance(obj, Instance):
        print("solve expects a crcs instance file", file=sys.stderr)
        return EXIT_ERROR
    budget = SearchBudget(max_states=args.budget) if args.budget else DEFAULT_BUDGET
    solver = args.solver if args.solver != "auto" else _pick_solver(obj)
    cotree = parse_cotree(_read(args.cotree)) if args.cotree else None

    if solver == "oracle":
        reach = ecrcs_reachable if obj.extended else crcs_reachable
        decision = reach(obj, budget)
        if decision.is_overflow:
            print("OVERFLOW")
            return EXIT_OVERFLOW
        print("YES" if decision.is_yes else "NO")
        if decision.is_yes and args.witness:
            for move in decision.witness.moves:
                print(f"swap {move.u} {move.v}")
        return EXIT_YES if decision.is_yes else EXIT_NO

    if solver == "k2":
        answer = solve_k_le_2(obj)
    elif solver == "path":
        answer = solve_path(obj)
    elif solver == "cograph":
        answer = solve_crcs_cograph(obj, cotree)
    else:
        answer = solve_split(obj, budget.max_states)
    if args.witness:
        print(f"solver {solver} is decision-only; no witness emitted", file=sys.stderr)
    print("YES" if answer else "NO")
    return EXIT_YES if answer else EXIT_NO


def cmd_kernelize(args) -> int:
    obj = parse_instance(_read(args.file))
    if not isinstance(obj, Instance):
        print("kernelize expects a crcs instance file", file=sys.stderr)
        return EXIT_ERROR
    result = kernelize(obj)
    if result.outcome == "NO":
        print("NO")
        return EXIT_NO
    log = "".join(f"removed {v}\n" for v in result.removed)
    _write(args.output, serialize_instance(result.instance))
    if args.output is None:
        sys.stderr.write(log)
    else:
        sys.stdout.write(log)
    return EXIT_YES


def _layout_lines(layout: GadgetLayout) -> str:
    lines = [f"role {name} {vid}" for name, vid in layout.roles.items()]
    lines += [
        f"port {e} {u} {v}" for e, (u, v) in sorted(layout.port_edges.items())
    ]
    return "".join(line + "\n" for line in lines)


def cmd_reduce(args) -> int:
    obj = parse_instance(_read(args.file))
    layout = GadgetLayout()
    if args.kind == "ts-split":
        if not isinstance(obj, TokenSlidingInstance):
            print("ts-split expects a ts instance file", file=sys.stderr)
            return EXIT_ERROR
        instance = ts_split_to_crcs(obj)
        layout.roles["universal"] = obj.graph.n
    elif args.kind == "ts-bipartite":
        if not isinstance(obj, TokenSlidingInstance):
            print("ts-bipartite expects a ts instance file", file=sys.stderr)
            return EXIT_ERROR
        instance = ts_bipartite_to_crcs(obj)
        n = obj.graph.n
        for i, name in enumerate(("x1", "x2", "x3", "y1", "y2", "y3")):
            layout.roles[name] = n + i
    elif args.kind == "svr-chordal":
        if not isinstance(obj, SVRInstance):
            print("svr-chordal expects an svr instance file", file=sys.stderr)
            return EXIT_ERROR
        instance = svr_to_kcrcs(obj)
        n, k = obj.graph.n, obj.k
        for v in range(n):
            for i in range(k - 1):
                layout.roles[f"v{v}.c{i + 1}"] = n + v * (k - 1) + i
    else:
        if not isinstance(obj, NCLInstance):
            print("ncl expects an ncl instance file", file=sys.stderr)
            return EXIT_ERROR
        instance, layout = ncl_to_3crcs(obj.machine, obj.c_s, obj.c_t)

    _write(args.output, serialize_instance(instance))
    layout_path = args.layout
    if layout_path is None and args.output is not None:
        layout_path = args.output + ".layout"
    if layout_path is not None:
        _write(layout_path, _layout_lines(layout))
    return EXIT_YES


def cmd_gen(args) -> int:
    n = args.n if args.n is not None else args.n_flag
    if n is None:
        print("gen needs a size (positional n or --n)", file=sys.stderr)
        return EXIT_ERROR
    rng = random.Random(args.seed)
    if args.kind == "path":
        graph = gen_path_graph(n)
    elif args.kind == "cograph":
        graph, _ = gen_cograph(n, rng)
    elif args.kind == "split":
        graph = gen_split_graph(n, rng)
    else:
        graph = gen_random_graph(n, args.p, rng)
    k = args.k if args.k is not None else max(3, greedy_color_count(graph))
    instance = random_instance(graph, k, rng, force_valid=args.valid)
    if instance is None:
        print(f"no proper coloring with k = {k}", file=sys.stderr)
        return EXIT_ERROR
    _write(args.output, serialize_instance(instance))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorswap",
        description="Decide reachability between proper colorings under adjacent color swaps.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("file")
    p.add_argument(
        "--solver",
        choices=("auto", "oracle", "path", "cograph", "split", "k2"),
        default="auto",
    )
    p.add_argument("--witness", action="store_true", help="print swap lines (oracle only)")
    p.add_argument("--budget", type=int, default=None, metavar="STATES")
    p.add_argument("--cotree", default=None, metavar="FILE", help="externally supplied cotree")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", help="shrink a split-graph instance")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("reduce", help="build an instance from a source problem")
    p.add_argument("kind", choices=("ts-split", "ts-bipartite", "svr-chordal", "ncl"))
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--layout", default=None, metavar="FILE", help="layout sidecar path")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("kind", choices=("path", "cograph", "split", "random"))
    p.add_argument("n", nargs="?", type=int, default=None)
    p.add_argument("--n", dest="n_flag", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5, help="edge probability (random kind)")
    p.add_argument("--valid", action="store_true", help="force matching color counts")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceededError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except ColorSwapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
