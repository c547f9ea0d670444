"""Command-line interface: ``treemetric <command> ...``.

Exit status is 0 on success, 1 on usage or input errors, and 2 when
``oracle-check`` finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import compare_backends, parse_depths, run_scaling, tagged_rows, write_csv
from .best_match import witness
from .fixtures import write_fixtures
from .labels import AlphabetError, WeightScheme, load_alphabet
from .left_regular import left_regularize
from .metrics import (
    LOCK_AWARE,
    METRIC_NAMES,
    USES_LABEL_METRIC,
    USES_ORDER,
    USES_SHAPE,
    distance,
    distance_matrix,
    write_matrix_csv,
)
from .oracle import OracleLimitError, check_random
from .trees import TreeError, complete, random_tree, read_tree, serialize

EXIT_OK, EXIT_ERROR, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default; 2 is reserved for counterexamples
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _warn(msg: str):
    print(f"warning: {msg}", file=sys.stderr)


def _emit(text: str, output):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _alphabet(args, trees):
    order = getattr(args, "order", None)
    metric_csv = getattr(args, "label_metric", None)
    if not order and not metric_csv:
        return None
    labels = set().union(*(t.labels() for t in trees))
    return load_alphabet(order, metric_csv, labels)


def _check_flags(args, trees):
    metric = args.metric
    if args.order and metric not in USES_ORDER:
        _warn(f"--order has no effect on --metric {metric}")
    if args.label_metric and metric not in USES_LABEL_METRIC:
        _warn(f"--label-metric has no effect on --metric {metric}")
    if metric not in USES_SHAPE:
        for flag in ("weights", "level", "arity"):
            if getattr(args, flag) is not None:
                _warn(f"--{flag} has no effect on --metric {metric}")
    if metric not in LOCK_AWARE and any(t.has_locks() for t in trees):
        _warn(f"lock marks present; --metric {metric} ignores them")


def _weights(args):
    return WeightScheme.parse(args.weights) if args.weights else None


def cmd_dist(args) -> int:
    trees = [read_tree(args.tree1), read_tree(args.tree2)]
    _check_flags(args, trees)
    alphabet = _alphabet(args, trees)
    report = distance(args.metric, *trees, alphabet, _weights(args), level=args.level, arity=args.arity)
    info = report.as_dict(args.float)
    if args.witness:
        if args.metric not in ("bm", "bmstar"):
            _warn("--witness is only available for bm and bmstar")
        else:
            e1, e2 = witness(
                *trees, alphabet, _weights(args),
                respect_locks=args.metric == "bmstar", level=args.level, arity=args.arity,
            )
            info["embedding1"] = str(e1)
            info["embedding2"] = str(e2)
    if args.json:
        print(json.dumps(info, sort_keys=False))
    else:
        for key, value in info.items():
            print(f"{key}={value}")
    return EXIT_OK


def cmd_matrix(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise UsageError(f"{directory}: not a directory")
    files = sorted(p for p in directory.iterdir() if p.suffix == ".tree")
    if len(files) < 2:
        raise UsageError(f"{directory}: need at least two .tree files")
    trees = {}
    for p in files:
        try:
            trees[p.stem] = read_tree(p)
        except TreeError as exc:
            raise UsageError(f"{p.name}: {exc}") from None
    _check_flags(args, trees.values())
    alphabet = _alphabet(args, trees.values())
    names, rows = distance_matrix(
        args.metric, trees, alphabet, _weights(args), level=args.level, arity=args.arity, jobs=args.jobs
    )
    if args.output:
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            write_matrix_csv(names, rows, fh, args.float)
    else:
        write_matrix_csv(names, rows, sys.stdout, args.float)
    return EXIT_OK


def cmd_regularize(args) -> int:
    t = read_tree(args.tree)
    if t.has_locks():
        _warn("lock marks present; regularization ignores them")
    alphabet = _alphabet(args, [t])
    c = left_regularize(t, alphabet, args.arity, args.level)
    print(str(c))
    print(c.string)
    return EXIT_OK


def cmd_complete(args) -> int:
    c = complete(read_tree(args.tree), args.level, args.arity)
    print(str(c))
    print(c.string)
    return EXIT_OK


def cmd_gen(args) -> int:
    labels = tuple(s.strip() for s in args.labels.split(",") if s.strip())
    t = random_tree(args.seed, args.depth, args.arity, labels, args.locks)
    _emit(serialize(t) + "\n", args.output)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    found = check_random(args.seed, args.trials, args.max_depth, args.locks)
    if found is not None:
        print("counterexample:")
        print(found)
        return EXIT_COUNTEREXAMPLE
    kind = "d_bm_star" if args.locks else "d_bm"
    print(f"ok: {kind} matched enumeration on {args.trials} pairs (seed={args.seed}, max_depth={args.max_depth})")
    return EXIT_OK


def cmd_bench(args) -> int:
    depths = parse_depths(args.depths)
    kwargs = dict(adversarial=args.adversarial)
    if args.compare:
        series = compare_backends(args.metric, depths, args.arity, args.seed, args.trials, **kwargs)
        rows = tagged_rows(series)
    else:
        rows = run_scaling(args.metric, depths, args.arity, args.seed, args.trials, backend=args.backend, **kwargs)
    write_csv(rows, args.output)
    for r in rows:
        ratio = "" if r.ratio is None else f" ratio={r.ratio:.2f}"
        print(f"{r.backend} {r.metric} depth={r.depth} n={r.n} median_ns={r.median_ns}{ratio}", file=sys.stderr)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    for p in write_fixtures(args.output):
        print(p)
    return EXIT_OK


def _metric_options(p, default=None):
    p.add_argument("--metric", choices=METRIC_NAMES, required=default is None, default=default)
    p.add_argument("--order", help="file with one label per line, ascending")
    p.add_argument("--label-metric", help="CSV table of label distances")
    p.add_argument("--weights", help="'constant' or 'exp:BETA'")
    p.add_argument("--level", type=int, help="completion level (default: deepest tree)")
    p.add_argument("--arity", type=int, help="completion arity (default: widest vertex, at least 2)")
    p.add_argument("--float", action="store_true", help="print decimals instead of exact fractions")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treemetric", description="Distances between rooted labeled trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dist", help="distance between two tree files")
    p.add_argument("tree1")
    p.add_argument("tree2")
    _metric_options(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--witness", action="store_true", help="also print an optimal pair of embeddings")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("matrix", help="pairwise distances over a directory of .tree files")
    p.add_argument("directory")
    _metric_options(p)
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("regularize", help="left-regular canonical form")
    p.add_argument("tree")
    p.add_argument("--level", type=int)
    p.add_argument("--arity", type=int)
    p.add_argument("--order")
    p.add_argument("--label-metric")
    p.set_defaults(func=cmd_regularize)

    p = sub.add_parser("complete", help="level-m completion")
    p.add_argument("tree")
    p.add_argument("--level", type=int)
    p.add_argument("--arity", type=int)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("gen", help="random tree")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--labels", default="X,Y,Z")
    p.add_argument("--locks", type=float, default=0.0, help="lock probability for internal vertices")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-check", help="compare the recursion with brute force")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--locks", action="store_true", help="random locks; checks d_bm_star")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("bench", help="scaling benchmark")
    p.add_argument("--metric", choices=("bm", "lr", "bmstar"), required=True)
    p.add_argument("--depths", required=True, help="A..B inclusive")
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--backend", choices=("auto", "python", "compiled"), default="auto")
    p.add_argument("--adversarial", action="store_true", help="single-label inputs")
    p.add_argument("--compare", action="store_true", help="run every available backend")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("fixtures", help="write the reference trees")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TreeError, AlphabetError, OracleLimitError, ValueError, RuntimeError, OSError) as exc:
        print(f"treemetric {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
