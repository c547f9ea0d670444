"""Acceptance checks, one PASS/FAIL line per criterion.

Under pytest the lines are repeated in the terminal summary, so they are
visible even with output capture on. ``python3 tests/test_acceptance.py``
also works.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from helpers import ACCEPTANCE_LINES, mutate_label, random_swaps  # noqa: E402

from treemetric.baselines import d_bu, d_st, largest_common_forest, largest_common_subtree  # noqa: E402
from treemetric.bench import run_scaling  # noqa: E402
from treemetric.best_match import d_bm, d_bm_star  # noqa: E402
from treemetric.fixtures import ORDERS, TABLE, tree  # noqa: E402
from treemetric.labels import LabelAlphabet  # noqa: E402
from treemetric.left_regular import d_lr, left_regularize  # noqa: E402
from treemetric.oracle import check_random, enumerate_embeddings  # noqa: E402
from treemetric.ordered import d_ot  # noqa: E402
from treemetric.trees import parse_tree, random_tree  # noqa: E402

NXYZ = LabelAlphabet(ORDERS["NXYZ"])
ZXWS = LabelAlphabet(ORDERS["ZXWS"])


def _line(tag: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} {tag}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _check(tag, failures, detail):
    _line(tag, not failures, detail if not failures else f"{detail}; first failures: {failures[:3]}")
    assert not failures, failures


def _equivalent_by_enumeration(a, b, locks=False):
    m = max(a.depth, b.depth)
    from treemetric.trees import complete

    # lock marks are annotations, not part of the plain ordered tree
    e1 = {e.labels for e in enumerate_embeddings(complete(a, m, 2), locks)}
    return any(e.labels in e1 for e in enumerate_embeddings(complete(b, m, 2), locks))


def test_ac1_reference_pairs():
    start = time.perf_counter()
    failures = []
    for (n1, n2), expected in sorted(TABLE.items()):
        t1, t2 = tree(n1), tree(n2)
        got = (
            d_bm(t1, t2).value,
            d_lr(t1, t2, NXYZ).value,
            largest_common_forest(t1, t2).f,
            d_bu(t1, t2).value,
            largest_common_subtree(t1, t2).f,
            d_st(t1, t2).value,
        )
        want = expected[:3] + (Fraction(expected[3]),) + expected[4:5] + (Fraction(expected[5]),)
        if got != want:
            failures.append((n1, n2, got, want))
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.2f}s")
    _check("AC1 reference pair values", failures, f"{len(TABLE)} pairs x 6 quantities exact in {elapsed:.3f}s")


def test_ac2_developmental_pair():
    a, s = tree("T_A"), tree("T_S")
    checks = {
        "D_BM(T_A,T_S)": (d_bm(a, s).value, 8),
        "D_BM(ZSS,WWW)": (d_bm(parse_tree("Z(S,S)"), parse_tree("W(W,W)")).value, 3),
        "D_BM(XWWWWWW,XWWXXXX)": (d_bm(parse_tree("X(W(W,W),W(W,W))"), parse_tree("X(W(X,X),W(X,X))")).value, 4),
        "level-1 string": (left_regularize(a, ZXWS, stop=1).string, "WXZWWZZWWWWZZSS"),
        "level-0 string": (left_regularize(a, ZXWS).string, "WZXZZWWZZSSWWWW"),
        "D_LR(T_A,T_S)": (d_lr(a, s, ZXWS).value, 8),
    }
    failures = [(k, got, want) for k, (got, want) in checks.items() if got != want]
    _check("AC2 developmental pair T_A/T_S", failures, f"{len(checks)} values exact")


def test_ac3_worked_examples():
    t12, t13 = tree("T_12"), tree("T_13")
    t14, t15, t16 = tree("T_14"), tree("T_15"), tree("T_16")
    checks = {
        "D_OT(T12,T13)": (d_ot(t12, t13).value, 4),
        "D_BM(T12,T13)": (d_bm(t12, t13).value, 4),
        "D_LR(T12,T13)": (d_lr(t12, t13, NXYZ).value, 5),
        "regularized T12(2)": (str(left_regularize(t12, NXYZ, m=2)), "X(Z(Z,Y),Y(N,N))"),
        "D_BM*(T14,T15)": (d_bm_star(t14, t15).value, 0),
        "D_BM*(T14,T16)": (d_bm_star(t14, t16).value, 0),
        "D_BM*(T15,T16)": (d_bm_star(t15, t16).value, 6),
    }
    failures = [(k, got, want) for k, (got, want) in checks.items() if got != want]
    _check("AC3 worked examples", failures, f"{len(checks)} values exact")


def test_ac4_oracle_equivalence():
    start = time.perf_counter()
    failures = []
    per_mode = 300
    for locks in (False, True):
        found = check_random(2024 + locks, per_mode, 4, locks)
        if found is not None:
            failures.append(str(found))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s")
    _check(
        "AC4 oracle equivalence", failures,
        f"{2 * per_mode} random pairs (d_bm and d_bm_star; trivial/random metrics; constant/exp weights) in {elapsed:.1f}s",
    )


def _triples(rng, n):
    for i in range(n):
        a = random_tree(rng, rng.randint(0, 4), 2, lock_probability=0.5)
        # mix in swapped copies so that zero distances actually occur
        b = random_swaps(a, rng, 3) if i % 4 == 0 else random_tree(rng, rng.randint(0, 4), 2, lock_probability=0.5)
        c = random_swaps(b, rng, 3, unlocked_only=True) if i % 4 == 1 else random_tree(rng, rng.randint(0, 4), 2, lock_probability=0.5)
        yield a, b, c


def test_ac5_metric_axioms():
    rng = random.Random(5)
    failures = []
    n = 250
    for a, b, c in _triples(rng, n):
        for name, fn in (("bm", d_bm), ("lr", d_lr)):
            ab, ba, bc, ac = fn(a, b).value, fn(b, a).value, fn(b, c).value, fn(a, c).value
            if ab != ba:
                failures.append((name, "symmetry", str(a), str(b)))
            if ac > ab + bc:
                failures.append((name, "triangle", str(a), str(b), str(c)))
            if (ab == 0) != _equivalent_by_enumeration(a, b):
                failures.append((name, "zero-iff-equivalent", str(a), str(b)))
        # B1 symmetry, B2 zero iff semi-equivalent, B3 unlocked-swap invariance
        ab, ba = d_bm_star(a, b).value, d_bm_star(b, a).value
        if ab != ba:
            failures.append(("bm*", "B1", str(a), str(b)))
        if (ab == 0) != _equivalent_by_enumeration(a, b, locks=True):
            failures.append(("bm*", "B2", str(a), str(b)))
        if d_bm_star(random_swaps(a, rng, 4, unlocked_only=True), b).value != ab:
            failures.append(("bm*", "B3", str(a), str(b)))
    t14, t15, t16 = tree("T_14"), tree("T_15"), tree("T_16")
    lhs = d_bm_star(t14, t15).value + d_bm_star(t14, t16).value
    rhs = d_bm_star(t15, t16).value
    if not (lhs == 0 and rhs == 6):
        failures.append(("bm*", "expected triangle violation 0 + 0 < 6", lhs, rhs))
    _check("AC5 metric axioms", failures, f"{n} triples; D_BM* triangle violation {lhs} < {rhs} confirmed")


def test_ac6_order_relations():
    rng = random.Random(6)
    failures = []
    n = 300
    for _ in range(n):
        a, b = random_tree(rng, rng.randint(0, 5)), random_tree(rng, rng.randint(0, 5))
        bm = d_bm(a, b).value
        if d_lr(a, b).value < bm:
            failures.append(("lr<bm", str(a), str(b)))
        if largest_common_forest(a, b).f < largest_common_subtree(a, b).f:
            failures.append(("forest<subtree", str(a), str(b)))
        a2 = mutate_label(a, rng)
        if abs(d_bm(a2, b).value - bm) > 1:
            failures.append(("mutation", str(a), str(a2), str(b)))
    _check("AC6 order relations", failures, f"{n} pairs: D_LR>=D_BM, f_forest>=f_subtree, |dD_BM|<=1 per relabel")


def test_ac7_canonical_form():
    rng = random.Random(7)
    failures = []
    n = 300
    for i in range(n):
        k = 2 if i % 3 else 3
        t = random_tree(rng, rng.randint(0, 5), k)
        s = random_swaps(t, rng, rng.randint(1, 12))
        m = t.depth
        if left_regularize(s, NXYZ, k, m) != left_regularize(t, NXYZ, k, m):
            failures.append(("swap", str(t), str(s)))
        other = s if i % 2 else random_tree(rng, rng.randint(0, 5), k)
        m = max(t.depth, other.depth)
        same = left_regularize(t, NXYZ, k, m) == left_regularize(other, NXYZ, k, m)
        if same != (d_bm(t, other, arity=k).value == 0):
            failures.append(("iff", str(t), str(other)))
    _check("AC7 canonical form", failures, f"{n} trees under random swap sequences; canonical equality <=> D_BM=0")


def test_ac8_scaling():
    failures = []
    parts = []
    bounds = {"bm": (3, 6), "lr": (1.5, 3)}
    series = {}
    for metric, (lo, hi) in bounds.items():
        rows = run_scaling(metric, range(8, 12), k=2, seed=0, trials=7)
        ratios = series[metric] = [r.ratio for r in rows[1:]]
        parts.append(f"{metric}[{rows[0].backend}] ratios " + ", ".join(f"{x:.2f}" for x in ratios) + f" in [{lo},{hi}]")
        failures += [(metric, r.depth, r.ratio) for r in rows[1:] if not lo <= r.ratio <= hi]
    failures += [("bm<=lr", b, l) for b, l in zip(series["bm"], series["lr"]) if b <= l]
    _check("AC8 complexity scaling", failures, "; ".join(parts))


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
