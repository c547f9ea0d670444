"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/compare_backends.py --depths 6..9 --trials 5

Prints one line per (metric, backend, depth) and the compiled speedup.
"""

import argparse

from treemetric.bench import compare_backends, parse_depths


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depths", default="6..9")
    ap.add_argument("--metrics", default="bm,lr,bmstar")
    ap.add_argument("--arity", type=int, default=2)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for metric in args.metrics.split(","):
        series = compare_backends(metric, parse_depths(args.depths), args.arity, args.seed, args.trials)
        for name, rows in sorted(series.items()):
            for r in rows:
                ratio = "" if r.ratio is None else f"  ratio {r.ratio:5.2f}"
                print(f"{metric:7s} {name:9s} depth {r.depth:2d}  n {r.n:7d}  {r.median_ns / 1e6:10.3f} ms{ratio}")
        if "compiled" in series:
            for py, c in zip(series["python"], series["compiled"]):
                assert py.value == c.value, (metric, py.depth, py.value, c.value)
                print(f"{metric:7s} speedup   depth {py.depth:2d}  x{py.median_ns / c.median_ns:.1f}")


if __name__ == "__main__":
    main()
