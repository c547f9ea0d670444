"""Scaling measurements for the distance algorithms.

Inputs are perfect random k-ary trees, so completion is a no-op and the
vertex count at depth m is exactly (k^(m+1)-1)/(k-1). Each depth gets a
warmup call, then ``trials`` timed trials; a trial repeats the call enough
times to last at least ``min_trial_ns`` and records the per-call time. The
reported figure is the median over trials, and ``ratio`` is that median
divided by the previous depth's. Quadratic algorithms should approach
k^2 per depth step, linear ones k.
"""

from __future__ import annotations

import csv
import gc
import random
import statistics
import time
from dataclasses import dataclass, replace
from functools import partial

from . import _backend
from .best_match import d_bm, d_bm_star
from .labels import LabelAlphabet
from .left_regular import d_lr
from .trees import perfect_size, random_perfect_tree

METRICS = {
    "bm": d_bm,
    "lr": d_lr,
    "bmstar": d_bm_star,
}
ALIASES = {"bm_star": "bmstar"}
CSV_COLUMNS = ["metric", "depth", "n", "arity", "trials", "median_ns", "ratio"]
MAX_VERTICES = 1 << 22


@dataclass(frozen=True)
class ScalingRow:
    metric: str
    depth: int
    n: int
    arity: int
    trials: int
    median_ns: int
    ratio: float | None
    value: object = None
    backend: str = ""

    def csv_row(self) -> list:
        ratio = "" if self.ratio is None else f"{self.ratio:.4f}"
        return [self.metric, self.depth, self.n, self.arity, self.trials, self.median_ns, ratio]


def bench_inputs(metric: str, depth: int, k: int, seed, adversarial: bool = False):
    """The deterministic tree pair timed at one depth."""
    rng = random.Random(f"{seed}:{metric}:{depth}:{k}")
    labels = ("X",) if adversarial else ("X", "Y", "Z")
    locks = 0.5 if metric == "bmstar" else 0.0
    t1 = random_perfect_tree(rng, depth, k, labels, locks)
    t2 = random_perfect_tree(rng, depth, k, labels, locks)
    return t1, t2


def _time_call(fn, min_trial_ns: int) -> int:
    # collector pauses land on whichever call happens to trigger them, so
    # they are kept out of the timed region, as timeit does
    reps = 1
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        while True:
            start = time.perf_counter_ns()
            for _ in range(reps):
                fn()
            elapsed = time.perf_counter_ns() - start
            if elapsed >= min_trial_ns or reps >= 1 << 16:
                return elapsed // reps
            reps *= 2
    finally:
        if enabled:
            gc.enable()


def run_scaling(
    metric: str,
    depths,
    k: int = 2,
    seed=0,
    trials: int = 5,
    *,
    backend: str | None = None,
    adversarial: bool = False,
    min_trial_ns: int = 10_000_000,
) -> list[ScalingRow]:
    """Median per-call wall time of ``metric`` at each depth."""
    metric = ALIASES.get(metric, metric)
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {', '.join(METRICS)}")
    if trials < 5:
        raise ValueError("at least 5 trials are required")
    depths = list(depths)
    if depths != sorted(depths):
        raise ValueError("depths must be ascending")
    for m in depths:
        if perfect_size(k, m) > MAX_VERTICES:
            raise ValueError(f"depth {m} gives more than {MAX_VERTICES} vertices")
    fn = METRICS[metric]
    alphabet = LabelAlphabet(["X", "Y", "Z"])
    name = metric + ("-adv" if adversarial else "")
    with _backend.using(backend or _backend.get_backend()):
        used = _resolve_backend()
        calls, values = [], []
        for m in depths:
            t1, t2 = bench_inputs(metric, m, k, seed, adversarial)
            call = partial(fn, t1, t2, alphabet)
            values.append(call().value)  # warmup; also the recorded value
            calls.append(call)
        # depths are interleaved within each round so that machine-load drift
        # is shared by every depth instead of skewing one of them
        times = [[] for _ in depths]
        for _ in range(trials):
            for i, call in enumerate(calls):
                times[i].append(_time_call(call, min_trial_ns))
    rows = []
    prev = None
    for m, value, ts in zip(depths, values, times):
        med = int(statistics.median(ts))
        ratio = None if prev is None else med / prev
        rows.append(ScalingRow(name, m, perfect_size(k, m), k, trials, med, ratio, value, used))
        prev = med
    return rows


def _resolve_backend() -> str:
    pref = _backend.get_backend()
    if pref == "auto":
        return "compiled" if "compiled" in _backend.available() else "python"
    return pref


def compare_backends(metric: str, depths, k: int = 2, seed=0, trials: int = 5, **kwargs):
    """Run the same scaling series on every available backend."""
    return {
        name: run_scaling(metric, depths, k, seed, trials, backend=name, **kwargs)
        for name in _backend.available()
    }


def tagged_rows(series: dict) -> list[ScalingRow]:
    """Flatten a backend comparison, tagging each metric as ``metric@backend``."""
    return [replace(r, metric=f"{r.metric}@{name}") for name in sorted(series) for r in series[name]]


def write_csv(rows, path_or_file):
    own = isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__")
    fh = open(path_or_file, "w", newline="", encoding="utf-8") if own else path_or_file
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(r.csv_row())
    finally:
        if own:
            fh.close()


def parse_depths(spec: str) -> range:
    """``A..B`` (inclusive) or a single depth."""
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(spec), int(spec) + 1)
