"""Uniform entry point over every distance, plus pairwise matrices."""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Mapping

from .baselines import d_bu, d_st
from .best_match import d_bm, d_bm_star
from .labels import LabelAlphabet, WeightScheme
from .left_regular import d_lr
from .ordered import DistanceReport, alphabet_for, d_ot, format_number
from .trees import Tree

PARAMETRIC: dict[str, Callable[..., DistanceReport]] = {
    "ot": d_ot,
    "bm": d_bm,
    "bmstar": d_bm_star,
    "lr": d_lr,
}
BASELINE: dict[str, Callable[[Tree, Tree], DistanceReport]] = {"bu": d_bu, "st": d_st}
METRIC_NAMES = tuple(PARAMETRIC) + tuple(BASELINE)

# which optional inputs each metric actually reads
USES_ORDER = {"lr"}
USES_LABEL_METRIC = {"ot", "bm", "bmstar", "lr"}
USES_SHAPE = {"ot", "bm", "bmstar", "lr"}
LOCK_AWARE = {"bmstar"}


def distance(
    metric: str,
    t1: Tree,
    t2: Tree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    level: int | None = None,
    arity: int | None = None,
) -> DistanceReport:
    """Dispatch to the named metric. Baselines ignore the optional inputs."""
    if metric in BASELINE:
        return BASELINE[metric](t1, t2)
    try:
        fn = PARAMETRIC[metric]
    except KeyError:
        raise ValueError(f"unknown metric {metric!r}; choose from {', '.join(METRIC_NAMES)}") from None
    return fn(t1, t2, alphabet, weights, level=level, arity=arity)


def distance_matrix(
    metric: str,
    trees: Mapping[str, Tree],
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    level: int | None = None,
    arity: int | None = None,
    jobs: int = 1,
) -> tuple[list[str], list[list]]:
    """Symmetric matrix over ``trees`` with rows sorted by name.

    Pairs may be computed concurrently; the assembled matrix does not
    depend on completion order.
    """
    names = sorted(trees)
    if alphabet is None and metric in PARAMETRIC:
        alphabet = alphabet_for([trees[n] for n in names], None)

    def one(pair):
        a, b = pair
        return distance(metric, trees[a], trees[b], alphabet, weights, level=level, arity=arity).value

    pairs = list(combinations(names, 2))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(one, pairs))
    else:
        values = [one(p) for p in pairs]
    index = {n: i for i, n in enumerate(names)}
    rows: list[list] = [[0] * len(names) for _ in names]
    for (a, b), v in zip(pairs, values):
        rows[index[a]][index[b]] = rows[index[b]][index[a]] = v
    return names, rows


def write_matrix_csv(names, rows, fh, as_float: bool = False):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([""] + list(names))
    for name, row in zip(names, rows):
        w.writerow([name] + [format_number(v, as_float) for v in row])
