"""Command-line surface: decision runs, searches, grids, reductions, benchmarks.

Every command prints JSON, CSV, or a `GRID v1` file.  Exit codes: 0 on
success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import product

from .bench import analytic_dyck_fit, bench_scaling, fit_report, parse_csv
from .dyck import decide_dyck
from .fold import dyck_to_undirected_fold, fold_default_dims
from .formula import build_padded, evaluate, formula_size_bound, query_estimate
from .grid import GridInstance, connectivity, dump_grid, load_grid
from .oracle import Backend, CostModel, ExecutionContext
from .plotsvg import emit_plot
from .reductions import (
    ExParams,
    dyck_to_directed_grid,
    directed_ddim_parallel,
    ex_to_block,
    fold_dim_reduce,
)
from .substring import (
    Direction,
    SearchParams,
    find_any,
    find_first,
    find_fixed_len,
    find_fixed_pos,
    find_from,
    find_from_right,
)
from .words import Word, parse_symbols


def _default_seed() -> int:
    return int(os.environ.get("DYCKGRID_SEED", "0"))


def _add_backend_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=["reference", "modeled", "sampled"], default="reference")
    p.add_argument("--eps", type=float, default=0.0, help="fault-injection rate (sampled only)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--c1", type=int, default=1, help="threshold-search cost constant")
    p.add_argument("--c2", type=int, default=1, help="amplification cost constant")


def _context(args, word: Word) -> ExecutionContext:
    backend = Backend(args.backend)
    seed = args.seed if args.seed is not None else _default_seed()
    eps = args.eps if backend is Backend.SAMPLED else 0.0
    return ExecutionContext(word, backend, epsilon=eps, seed=seed,
                            cost_model=CostModel(args.c1, args.c2))


def _match_json(m):
    return None if m is None else {"i": m.i, "j": m.j, "sign": m.sign}


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_dyck(args) -> int:
    word = Word(args.word)
    ctx = _context(args, word)
    accept = decide_dyck(ctx, word, args.k)
    _emit({"accept": accept, "ledger": ctx.ledger, "modeled_cost": ctx.rounded_modeled_cost()})
    return 0


def cmd_find(args) -> int:
    word = Word(args.word)
    ctx = _context(args, word)
    n = len(word)
    l = args.l if args.l is not None else 0
    r = args.r if args.r is not None else n - 1
    signs = {"+": frozenset((1,)), "-": frozenset((-1,)), "both": frozenset((1, -1))}[args.sign]
    direction = Direction(args.direction)
    kind = args.kind
    if kind in ("from", "fromright"):
        if args.t is None or args.d is None:
            raise ValueError(f"--kind {kind} needs --t and --d")
        p = SearchParams(l, r, t=args.t, d=args.d, s=signs)
        m = (find_from if kind == "from" else find_from_right)(ctx, args.k, p)
    elif kind == "fixedlen":
        if args.d is None:
            raise ValueError("--kind fixedlen needs --d")
        m = find_fixed_len(ctx, args.k, l, r, args.d, signs)
    elif kind == "any":
        m = find_any(ctx, args.k, l, r, signs)
    elif kind == "first":
        m = find_first(ctx, args.k, l, r, signs, direction)
    elif kind == "fixedpos":
        if args.t is None:
            raise ValueError("--kind fixedpos needs --t")
        m = find_fixed_pos(ctx, args.k, l, r, args.t, signs, direction)
    else:
        raise ValueError(f"unknown kind {kind}")
    _emit({"match": _match_json(m), "ledger": ctx.ledger,
           "modeled_cost": ctx.rounded_modeled_cost()})
    return 0


def cmd_grid_connect(args) -> int:
    with open(args.instance, "r", encoding="ascii") as fh:
        g = load_grid(fh.read())
    connected, visited = connectivity(g, count_visited=True)
    _emit({"connected": connected, "vertices_visited": visited})
    return 0


def cmd_reduce_ex2dyck(args) -> int:
    bits = parse_symbols(args.input) if set(args.input) <= set("01") else None
    if bits is None:
        raise ValueError("--input must be a 0/1 string")
    block = ex_to_block(ExParams(args.m, args.levels), bits)
    _emit({
        "word": "".join("()"[b] for b in block.word.bits),
        "w": block.width,
        "h": block.height,
    })
    return 0


def _write_embedding(emb, out_path, cert_path) -> None:
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(dump_grid(emb.target))
    cert = {
        "source": emb.source,
        "dims": list(emb.target.dims),
        "directed": emb.target.directed,
        "edges": [[eid, *cls] for eid, cls in sorted(emb.classes.items())],
        "slots": emb.slots,
    }
    with open(cert_path, "w", encoding="ascii") as fh:
        json.dump(cert, fh, sort_keys=True)
        fh.write("\n")


def cmd_embed(args) -> int:
    if args.mode == "trapezoid":
        words = [Word(w) for w in args.word]
        if not words:
            raise ValueError("trapezoid mode needs at least one --word")
        emb = dyck_to_directed_grid(words, args.depth)
        _write_embedding(emb, args.out, args.cert)
        _emit({"out": args.out, "cert": args.cert, "dims": list(emb.target.dims)})
    elif args.mode == "fold":
        if len(args.word) != 1:
            raise ValueError("fold mode embeds exactly one --word")
        word = Word(args.word[0])
        if args.n is not None and args.k is not None:
            dims = (args.n, args.k)
        else:
            dims = fold_default_dims(len(word), args.depth, args.k)
        emb = dyck_to_undirected_fold(word, args.depth, dims)
        _write_embedding(emb, args.out, args.cert)
        _emit({"out": args.out, "cert": args.cert, "dims": list(emb.target.dims)})
    elif args.mode == "ddim-fold":
        dims = tuple(int(x) for x in args.dims.split(","))
        fold = fold_dim_reduce(dims)
        meta = {
            "source_dims": list(fold.source_dims),
            "target_dims": list(fold.target_dims),
            "folded_layers": fold.folded_layers,
            "extra_edge": None if fold.extra_edge is None
            else {"lower": list(fold.extra_edge[0]), "axis": fold.extra_edge[1]},
        }
        if args.instance:
            with open(args.instance, "r", encoding="ascii") as fh:
                folded = load_grid(fh.read())
            pulled = fold.pull_back(folded)
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write(dump_grid(pulled))
            meta["out"] = args.out
        with open(args.cert, "w", encoding="ascii") as fh:
            json.dump(meta, fh, sort_keys=True)
            fh.write("\n")
        _emit(meta)
    elif args.mode == "ddim-parallel":
        prefix = tuple(int(x) for x in args.dims.split(","))
        planes = []
        plane_dims = None
        for path in args.instance:
            with open(path, "r", encoding="ascii") as fh:
                g = load_grid(fh.read())
            planes.append(g)
            plane_dims = g.dims
        idxs = list(product(*(range(n + 1) for n in prefix)))
        if len(planes) != len(idxs):
            raise ValueError(f"need {len(idxs)} --instance files for prefix dims {prefix}")
        composite = directed_ddim_parallel(prefix, dict(zip(idxs, planes)), plane_dims)
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(dump_grid(composite))
        _emit({"out": args.out, "dims": list(composite.dims)})
    else:
        raise ValueError(f"unknown embed mode {args.mode}")
    return 0


def cmd_formula(args) -> int:
    f = build_padded(args.n, args.k)
    out = {
        "leaf_count": f.leaf_count,
        "bound": formula_size_bound((args.n - 1).bit_length(), args.k),
        "query_estimate": query_estimate(f),
    }
    if args.emit == "eval":
        if not args.instance:
            raise ValueError("--emit eval needs --instance")
        with open(args.instance, "r", encoding="ascii") as fh:
            g = load_grid(fh.read())
        out["value"] = evaluate(f, g)
    _emit(out)
    return 0


def cmd_bench(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    csv_text = bench_scaling(args.algo, args.k, args.n_min, args.n_max,
                             args.points, args.trials, seed)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.fit:
        report = {
            "empirical": fit_report(parse_csv(csv_text)),
            "analytic": analytic_dyck_fit(args.k) if args.algo == "dyck" else None,
        }
        _emit(report)
    return 0


def cmd_plot(args) -> int:
    with open(args.csv, "r", encoding="ascii") as fh:
        svg = emit_plot(fh.read())
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(svg)
    _emit({"out": args.out})
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="dyckgrid")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dyck", help="decide bounded-depth balanced membership")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, required=True)
    _add_backend_flags(p)
    p.set_defaults(fn=cmd_dyck)

    p = sub.add_parser("find", help="run one substring search")
    p.add_argument("--kind", required=True,
                   choices=["from", "fromright", "fixedlen", "any", "first", "fixedpos"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--sign", choices=["+", "-", "both"], default="both")
    p.add_argument("--direction", choices=["left", "right"], default="right")
    _add_backend_flags(p)
    p.set_defaults(fn=cmd_find)

    p = sub.add_parser("grid", help="grid instance operations")
    gsub = p.add_subparsers(dest="grid_cmd", required=True)
    pc = gsub.add_parser("connect", help="corner-to-corner connectivity")
    pc.add_argument("--instance", required=True)
    pc.add_argument("--method", choices=["bfs"], default="bfs")
    pc.set_defaults(fn=cmd_grid_connect)

    p = sub.add_parser("reduce", help="reductions")
    rsub = p.add_subparsers(dest="reduce_cmd", required=True)
    pr = rsub.add_parser("ex2dyck", help="exact-count inputs to parenthesis blocks")
    pr.add_argument("--m", type=int, required=True)
    pr.add_argument("--levels", type=int, required=True)
    pr.add_argument("--input", required=True)
    pr.set_defaults(fn=cmd_reduce_ex2dyck)

    p = sub.add_parser("embed", help="embed words or instances into grids")
    p.add_argument("--mode", required=True,
                   choices=["trapezoid", "fold", "ddim-fold", "ddim-parallel"])
    p.add_argument("--word", action="append", default=[])
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--dims", help="comma-separated dims (ddim modes)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--instance", action="append", default=[])
    p.add_argument("--out", default="instance.grid")
    p.add_argument("--cert", default="certificate.json")
    p.set_defaults(fn=cmd_embed)

    p = sub.add_parser("formula", help="grid connectivity formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit", choices=["stats", "eval"], default="stats")
    p.add_argument("--instance")
    p.set_defaults(fn=cmd_formula)

    p = sub.add_parser("bench", help="scaling benchmark CSV")
    p.add_argument("--algo", required=True, choices=["dyck", "findany", "findfirst"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--points", type=int, default=7)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.add_argument("--fit", action="store_true", help="print a fit report")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("plot", help="render a benchmark CSV as SVG")
    p.add_argument("--csv", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_plot)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
