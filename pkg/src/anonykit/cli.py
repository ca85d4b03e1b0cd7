"""``anonykit`` command line.

Exit codes: 0 on success, 2 when the input admits no k-anonymous solution,
1 for any other error. Numbers in results are integers or exact ``p/q``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .bincover import approx_two_eps, exact_min_max, fold, relaxed_one_eps, spread, spread_experimental
from .census import VARIANTS, default_k_grid, load_frequency_table, run_sweep
from .errors import AnonykitError, InfeasibleError
from .graphs import exact_connected_partition, partition_graph
from .io import read_graph, read_points, read_sizes
from .model import make_instance
from .rects import guillotine_optimal, kd_partition
from .report import emit_report
from .rng import shuffled


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _packing_json(name: str, packing, extra=None) -> dict:
    inst = packing.instance
    out = {
        "algorithm": name,
        "k": inst.k,
        "n": inst.n,
        "kappa": max(inst.k, max(inst.sizes)),
        "cost": packing.cost,
        "ratio": str(Fraction(packing.cost, inst.k)),
        "feasible": packing.feasible,
        "bins": [list(b) for b in packing.bins],
        "levels": list(packing.levels),
    }
    if extra:
        out.update(extra)
    return out


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_bincover_solve(args) -> None:
    inst = make_instance(read_sizes(args.file), args.k)
    if args.order == "given":
        order = list(range(inst.n))
    elif args.order == "sorted":
        order = sorted(range(inst.n), key=lambda i: (-inst.sizes[i], i))
    else:
        order = shuffled(inst.n, args.seed)

    algo = args.algo
    extra = {}
    if algo == "fold":
        p = fold(inst, order)
    elif algo == "spread":
        p = spread(inst)
    elif algo == "spread-exp":
        p = spread_experimental(inst, order)
    elif algo == "ptas":
        p = approx_two_eps(inst, args.epsilon)
        extra["epsilon"] = str(args.epsilon)
    else:
        p = relaxed_one_eps(inst, args.epsilon)
        extra.update(epsilon=str(args.epsilon), min_level=p.floor_level)
    if algo in ("fold", "spread-exp"):
        extra.update(order=args.order, seed=args.seed)
    _emit(_packing_json(algo, p, extra))


def cmd_sweep(args) -> None:
    table = load_frequency_table(args.freqfile, scale=args.scale)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    grid = default_k_grid(table, args.samples, spacing=args.spacing)
    report = run_sweep(table, algos, grid, args.seed)
    emit_report(report, args.csv, args.svg)
    print(f"{len(report.rows)} rows, {len(grid)} k values -> {args.csv}", file=sys.stderr)


def _graph_json(part, extra=None) -> dict:
    out = {
        "k": part.k,
        "kappa": part.kappa,
        "cost": part.cost,
        "parts": [list(p) for p in part.parts],
        "weights": list(part.weights),
    }
    if extra:
        out.update(extra)
    return out


def _load_graph(args):
    g, k, tree = read_graph(args.file)
    return g, (args.k if args.k is not None else k), tree


def cmd_graph_partition(args) -> None:
    g, k, tree = _load_graph(args)
    part = partition_graph(g, k, tree)
    _emit(_graph_json(part, {"tree_degree": part.tree_degree, "bound": part.bound, "ratio_bound": part.ratio_bound}))


def cmd_rect_partition(args) -> None:
    tree = kd_partition(read_points(args.file), args.k)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["x_lo", "x_hi", "y_lo", "y_hi", "weight"])
    for leaf in tree.leaves():
        r = leaf.rect
        writer.writerow([r.x_lo, r.x_hi, r.y_lo, r.y_hi, leaf.weight])


def cmd_oracle(args) -> None:
    if args.kind == "bincover":
        cost, p = exact_min_max(make_instance(read_sizes(args.file), args.k))
        _emit(_packing_json("exact", p))
    elif args.kind == "graph":
        g, k, _ = _load_graph(args)
        cost, part = exact_connected_partition(g, k)
        _emit(_graph_json(part))
    else:
        cost, tree = guillotine_optimal(read_points(args.file), args.k)
        leaves = [
            {"x_lo": l.rect.x_lo, "x_hi": l.rect.x_hi, "y_lo": l.rect.y_lo, "y_hi": l.rect.y_hi, "weight": l.weight}
            for l in tree.leaves()
        ]
        _emit({"k": args.k, "cost": cost, "leaves": leaves})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anonykit", description="k-anonymizing generalization solvers")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    bc = sub.add_parser("bincover", help="Min-Max Bin Covering on a list of item sizes")
    bc_sub = bc.add_subparsers(dest="action", required=True)
    solve = bc_sub.add_parser("solve", help="solve one instance and print JSON")
    solve.add_argument("--algo", choices=["fold", "spread", "spread-exp", "ptas", "relaxed"], default="spread")
    solve.add_argument("--k", type=int, required=True)
    solve.add_argument("--epsilon", type=_fraction, default=Fraction(1, 2))
    solve.add_argument("--order", choices=["given", "sorted", "random"], default="given")
    solve.add_argument("--seed", type=_u64, default=0)
    solve.add_argument("file")
    solve.set_defaults(func=cmd_bincover_solve)

    sw = sub.add_parser("sweep", help="run the Fold/Spread k sweep over a name-frequency file")
    sw.add_argument("--algos", default=",".join(VARIANTS), help=f"comma list from {','.join(VARIANTS)}")
    sw.add_argument("--samples", type=int, default=200)
    sw.add_argument("--seed", type=_u64, default=0)
    sw.add_argument("--scale", type=int, default=1000)
    sw.add_argument("--spacing", choices=["log", "linear"], default="log")
    sw.add_argument("--csv", required=True)
    sw.add_argument("--svg")
    sw.add_argument("freqfile")
    sw.set_defaults(func=cmd_sweep)

    gr = sub.add_parser("graph", help="connected partitions of vertex-weighted graphs")
    gr_sub = gr.add_subparsers(dest="action", required=True)
    gp = gr_sub.add_parser("partition")
    gp.add_argument("--k", type=int, help="overrides k from the file header")
    gp.add_argument("file")
    gp.set_defaults(func=cmd_graph_partition)

    rc = sub.add_parser("rect", help="rectangular partitions of weighted points")
    rc_sub = rc.add_subparsers(dest="action", required=True)
    rp = rc_sub.add_parser("partition")
    rp.add_argument("--k", type=int, required=True)
    rp.add_argument("file")
    rp.set_defaults(func=cmd_rect_partition)

    orc = sub.add_parser("oracle", help="exact solvers for small inputs")
    orc.add_argument("kind", choices=["bincover", "graph", "rect"])
    orc.add_argument("--k", type=int)
    orc.add_argument("file")
    orc.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kind", None) in ("bincover", "rect") and args.k is None:
        parser.error(f"oracle {args.kind} requires --k")
    try:
        args.func(args)
    except InfeasibleError as exc:
        print(f"anonykit: infeasible: {exc}", file=sys.stderr)
        return 2
    except (AnonykitError, OSError, ValueError) as exc:
        print(f"anonykit: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
