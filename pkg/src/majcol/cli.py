"""Command-line interface.

Exit codes: 0 valid/feasible, 1 invalid/UNSAT, 2 usage or malformed input,
3 precondition violation (the message names the failed hypothesis and a
witness when one exists).  "-" means stdin wherever a file is expected.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations

from . import construct, exact, fractional, generators, hardness
from .digraph import Digraph
from .errors import FormatError, MajcolError
from .formats import (parse_coloring, parse_digraph, parse_hypergraph,
                      parse_lists, parse_partition, serialize_coloring,
                      serialize_digraph, serialize_fractional)
from .verify import HALF, MajorityParam, verify_majority


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_digraph(path: str) -> Digraph:
    return parse_digraph(_read(path))


def _alpha(text: str) -> MajorityParam:
    try:
        return MajorityParam.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --alpha value {text!r}: expected a/b") from exc


def _default_lists(d: Digraph, path, err):
    if path is None:
        return {v: frozenset({1, 2, 3}) for v in range(d.n)}
    lists = parse_lists(_read(path))
    missing = [v for v in range(d.n) if v not in lists]
    if missing:
        raise UsageError(f"lists file misses vertices {missing}")
    return lists


def _require_seed(args) -> int:
    if args.seed is None:
        if args.strict:
            raise UsageError("--strict requires an explicit --seed")
        return 0
    return args.seed


def _cmd_verify(args, out, err) -> int:
    d = _load_digraph(args.graph)
    coloring = parse_coloring(_read(args.coloring))
    alpha = _alpha(args.alpha)
    violating = verify_majority(d, coloring, alpha)
    if violating:
        for v in violating:
            print(f"violation at vertex {v}", file=err)
        return 1
    print("VALID", file=out)
    return 0


def _cmd_solve_exact(args, out, err) -> int:
    d = _load_digraph(args.graph)
    alpha = _alpha(args.alpha)
    if args.lists is not None:
        lists = _default_lists(d, args.lists, err)
        result = exact.exact_list_majority(d, lists, alpha)
    else:
        result = exact.exact_majority_colorable(d, args.colors, alpha)
    if result is None:
        print("UNSAT", file=out)
        return 1
    out.write(serialize_coloring(result))
    return 0


def _degenerate_color(d: Digraph, lists):
    # pair-list route without the bounded-degree preprocessing
    pair_lists = {
        v: frozenset(tuple(sorted(p, key=repr)) for p in
                     combinations(sorted(lists[v], key=repr)[:3], 2))
        for v in range(d.n)
    }
    chosen = construct.od3_choose(d, pair_lists)
    return construct.list_majority2(d, {v: frozenset(chosen[v])
                                        for v in range(d.n)})


def _cmd_color(args, out, err) -> int:
    d = _load_digraph(args.graph)
    strategy = args.strategy
    if strategy == "odd-partition":
        if args.partition is None:
            raise UsageError("--strategy odd-partition requires --partition")
        partition = parse_partition(_read(args.partition), d.n)
        coloring = construct.majority3_from_odd_partition(d, partition)
    elif strategy == "chromatic6":
        partition = construct.partition_chromatic6(d)
        coloring = construct.majority3_from_odd_partition(d, partition)
    elif strategy == "dichromatic3":
        partition = construct.partition_dichromatic(d, 3)
        if partition is None:
            print("UNSAT", file=out)
            return 1
        coloring = construct.majority3_from_odd_partition(d, partition)
    elif strategy == "degenerate":
        coloring = _degenerate_color(d, _default_lists(d, args.lists, err))
    elif strategy == "bounded-degree":
        coloring = construct.majority3_choose(
            d, _default_lists(d, args.lists, err))
    elif strategy == "alpha-k":
        if args.k is None:
            raise UsageError("--strategy alpha-k requires --k")
        if args.partition is not None:
            partition = parse_partition(_read(args.partition), d.n)
        else:
            partition = construct.partition_dichromatic(d, 2)
            if partition is None:
                print("UNSAT", file=out)
                return 1
        coloring = construct.alpha_majority_dichrom2(d, partition, args.k)
    else:
        raise UsageError(f"unknown strategy {strategy!r}")
    out.write(serialize_coloring(coloring))
    return 0


def _cmd_fractional(args, out, err) -> int:
    mode = args.mode
    if mode == "constants":
        params = fractional.SamplerParams(args.p1, args.p2)
        values, vmin = fractional.case_lower_bounds(params)
        for name in ("case1", "case2", "case3", "case4", "blue"):
            print(f"{name} {values[name]:.6f}", file=out)
        print(f"min {vmin:.6f}", file=out)
        print(f"bound {1.0 / vmin:.4f}", file=out)
        return 0
    if mode == "binom":
        tails, ok = fractional.binomial_tail_check(args.p1, args.k_max)
        for k, t in enumerate(tails):
            print(f"k={k} tail={t:.6f}", file=out)
        print("DOMINATED" if ok else "NOT-DOMINATED", file=out)
        return 0 if ok else 1

    d = _load_digraph(args.graph)
    seed = _require_seed(args)
    params = fractional.SamplerParams(args.p1, args.p2)
    if mode == "lp":
        value, fc, duals = exact.exact_fractional_weight(d)
        print(f"weight {value:.9f}", file=out)
        out.write(serialize_fractional(fc))
        print("dual " + " ".join(f"{y:.9f}" for y in duals), file=err)
        return 0
    if mode == "estimate":
        if args.N is not None:
            freq, se = fractional.estimate_highdeg_inclusion(
                d, args.N, args.trials, seed)
        else:
            freq, se = fractional.estimate_nonpopular_inclusion(
                d, params, args.trials, seed)
        for v in range(d.n):
            print(f"{v} {freq[v]:.6f} {se[v]:.6f}", file=out)
        return 0
    if mode == "sample-4c":
        fc, value = fractional.fractional_from_samples(
            d, "4c", batch=args.trials, seed=seed, params=params)
    elif mode == "sample-highdeg":
        if args.N is None:
            raise UsageError("--mode sample-highdeg requires --N")
        fc, value = fractional.fractional_from_samples(
            d, "highdeg", batch=args.trials, seed=seed, n_min=args.N)
    else:
        raise UsageError(f"unknown mode {mode!r}")
    print(f"weight {value:.9f}", file=out)
    out.write(serialize_fractional(fc))
    return 0


def _cmd_reduce(args, out, err) -> int:
    h = parse_hypergraph(_read(args.hypergraph))
    d, layout = hardness.reduce_hypergraph(h)
    out.write(serialize_digraph(d))
    for i, ids in enumerate(layout.placements):
        roles = " ".join(f"{r}={ids[r]}" for r in hardness.GADGET_ROLES)
        print(f"# gadget {i}: {roles}", file=out)
    return 0


def _cmd_gadget(args, out, err) -> int:
    if args.name != "d9":
        raise UsageError(f"unknown gadget {args.name!r}")
    out.write(serialize_digraph(hardness.build_d9()))
    return 0


def _cmd_gen(args, out, err) -> int:
    kind = args.kind
    if kind == "circulant":
        if len(args.params) != 2:
            raise UsageError("gen circulant needs: n k")
        d = generators.gen_circulant(int(args.params[0]), int(args.params[1]))
    elif kind == "tournament":
        if len(args.params) != 2:
            raise UsageError("gen tournament needs: n seed")
        d = generators.gen_tournament(int(args.params[0]), int(args.params[1]))
    elif kind == "regular":
        if len(args.params) != 3:
            raise UsageError("gen regular needs: n r seed")
        d = generators.gen_regular(int(args.params[0]), int(args.params[1]),
                                   int(args.params[2]))
    elif kind == "gnp":
        if len(args.params) != 3:
            raise UsageError("gen gnp needs: n p seed")
        d = generators.gen_gnp(int(args.params[0]), float(args.params[1]),
                               int(args.params[2]))
    else:
        raise UsageError(f"unknown generator {kind!r}")
    out.write(serialize_digraph(d))
    return 0


def _cmd_stable_sets(args, out, err) -> int:
    d = _load_digraph(args.graph)
    family = exact.enumerate_stable_sets(d, max_vertices=args.max_vertices)
    for s in family:
        print(" ".join(str(v) for v in sorted(s)) if s else "empty", file=out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="majcol",
                                description="Majority colorings of digraphs.")
    p.add_argument("--strict", action="store_true",
                   help="require explicit --seed on randomized commands")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a coloring")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--alpha", default="1/2")
    v.set_defaults(func=_cmd_verify)

    se = sub.add_parser("solve-exact", help="brute-force a coloring")
    se.add_argument("graph")
    se.add_argument("--colors", type=int, default=2)
    se.add_argument("--alpha", default="1/2")
    se.add_argument("--lists")
    se.set_defaults(func=_cmd_solve_exact)

    c = sub.add_parser("color", help="run a constructive procedure")
    c.add_argument("graph")
    c.add_argument("--strategy", required=True,
                   choices=["odd-partition", "chromatic6", "dichromatic3",
                            "degenerate", "bounded-degree", "alpha-k"])
    c.add_argument("--lists")
    c.add_argument("--partition")
    c.add_argument("--k", type=int)
    c.set_defaults(func=_cmd_color)

    f = sub.add_parser("fractional", help="fractional majority coloring")
    f.add_argument("graph")
    f.add_argument("--mode", required=True,
                   choices=["lp", "sample-4c", "sample-highdeg", "estimate",
                            "constants", "binom"])
    f.add_argument("--trials", type=int, default=64)
    f.add_argument("--seed", type=int, default=None)
    f.add_argument("--p1", type=float, default=0.4594)
    f.add_argument("--p2", type=float, default=0.4503)
    f.add_argument("--N", type=int, default=None)
    f.add_argument("--k-max", type=int, default=41)
    f.set_defaults(func=_cmd_fractional)

    r = sub.add_parser("reduce", help="hardness reduction")
    r.add_argument("problem", choices=["hyp2col"])
    r.add_argument("hypergraph")
    r.set_defaults(func=_cmd_reduce)

    g = sub.add_parser("gadget", help="emit a hardness gadget")
    g.add_argument("name")
    g.set_defaults(func=_cmd_gadget)

    gn = sub.add_parser("gen", help="generate an instance")
    gn.add_argument("kind",
                    choices=["circulant", "tournament", "regular", "gnp"])
    gn.add_argument("params", nargs="*")
    gn.set_defaults(func=_cmd_gen)

    ss = sub.add_parser("stable-sets", help="enumerate all stable sets")
    ss.add_argument("graph")
    ss.add_argument("--max-vertices", type=int, default=20)
    ss.set_defaults(func=_cmd_stable_sets)
    return p


def cli(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out, err)
    except (UsageError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except MajcolError as exc:
        print(f"precondition violated: {exc}", file=err)
        return 3


def entry() -> None:
    sys.exit(cli(sys.argv[1:]))
