import csv
import io

import pytest

from treemetric.bench import (
    CSV_COLUMNS,
    bench_inputs,
    parse_depths,
    run_scaling,
    tagged_rows,
    write_csv,
)

FAST = dict(min_trial_ns=100_000)


def test_inputs_deterministic():
    assert bench_inputs("bm", 5, 2, 3) == bench_inputs("bm", 5, 2, 3)
    assert bench_inputs("bm", 5, 2, 3) != bench_inputs("bm", 5, 2, 4)
    t1, _ = bench_inputs("bmstar", 4, 2, 0)
    assert any(t1.locks)
    t1, _ = bench_inputs("lr", 4, 2, 0, adversarial=True)
    assert set(t1.labels) == {"X"}


def test_rows_and_csv():
    rows = run_scaling("bm", range(3, 6), trials=5, **FAST)
    assert [r.depth for r in rows] == [3, 4, 5]
    assert [r.n for r in rows] == [15, 31, 63]
    assert rows[0].ratio is None and rows[1].ratio > 0
    buf = io.StringIO()
    write_csv(rows, buf)
    parsed = list(csv.reader(io.StringIO(buf.getvalue())))
    assert parsed[0] == CSV_COLUMNS
    assert parsed[1][:5] == ["bm", "3", "15", "2", "5"] and parsed[1][6] == ""


def test_values_are_reproducible():
    a = run_scaling("lr", [3, 4], seed=9, trials=5, **FAST)
    b = run_scaling("lr", [3, 4], seed=9, trials=5, **FAST)
    assert [r.value for r in a] == [r.value for r in b]


def test_adversarial_name_and_python_backend():
    rows = run_scaling("bmstar", [2, 3], trials=5, backend="python", adversarial=True, **FAST)
    assert rows[0].metric == "bmstar-adv" and rows[0].backend == "python"
    assert rows[0].value == 0


def test_tagged_rows():
    from treemetric.bench import compare_backends

    rows = tagged_rows(compare_backends("bm", [2, 3], trials=5, **FAST))
    assert rows[0].metric == "bm@" + sorted({r.backend for r in rows})[0]


@pytest.mark.parametrize(
    "kwargs",
    [dict(metric="xx", depths=[2]), dict(metric="bm", depths=[2], trials=3), dict(metric="bm", depths=[3, 2])],
)
def test_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        run_scaling(**kwargs)


def test_parse_depths():
    assert list(parse_depths("8..11")) == [8, 9, 10, 11]
    assert list(parse_depths("4")) == [4]


def test_alias_and_library_agreement():
    from treemetric.best_match import d_bm_star
    from treemetric.labels import LabelAlphabet

    rows = run_scaling("bm_star", [3], trials=5, **FAST)
    t1, t2 = bench_inputs("bmstar", 3, 2, 0)
    assert rows[0].metric == "bmstar"
    assert rows[0].value == d_bm_star(t1, t2, LabelAlphabet(["X", "Y", "Z"])).value
