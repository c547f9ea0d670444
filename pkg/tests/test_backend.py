import random

import pytest

from treemetric import _backend, _pykernels
from treemetric.best_match import d_bm, d_bm_star
from treemetric.labels import LabelAlphabet, WeightScheme
from treemetric.left_regular import d_lr, left_regularize
from treemetric.ordered import d_ot
from treemetric.trees import random_perfect_tree, random_tree

compiled = pytest.mark.skipif("compiled" not in _backend.available(), reason="extension not built")


def test_python_always_available():
    assert "python" in _backend.available()
    assert _backend.get_backend() == "auto"


def test_set_backend_validates():
    with pytest.raises(ValueError):
        _backend.set_backend("fortran")


def test_using_restores():
    with _backend.using("python"):
        assert _backend.get_backend() == "python"
    assert _backend.get_backend() == "auto"


def test_fractions_route_to_python():
    w = WeightScheme.parse("exp:1/2").per_level(3)
    mod, _ = _backend.choose(LabelAlphabet(["X"]).matrix, w)
    assert mod is _pykernels


@compiled
def test_backends_agree():
    rng = random.Random(21)
    metrics = [LabelAlphabet(["X", "Y", "Z"]), LabelAlphabet(["X", "Y", "Z"], lambda a, b: 0 if a == b else 2)]
    for i in range(120):
        k = rng.choice((2, 2, 3, 4))
        a = random_tree(rng, 5 if k == 2 else 3, k, lock_probability=0.4)
        b = random_tree(rng, 5 if k == 2 else 3, k, lock_probability=0.4)
        alph = metrics[i % 2]
        w = WeightScheme("exponential", 0.5) if i % 3 == 0 else None
        out = {}
        for name in ("python", "compiled"):
            with _backend.using(name):
                out[name] = (
                    d_ot(a, b, alph, w).value,
                    d_bm(a, b, alph, w).value,
                    d_bm_star(a, b, alph, w).value,
                    d_lr(a, b, alph, w).value,
                    left_regularize(a, alph),
                )
        assert out["python"][-1] == out["compiled"][-1]
        if w is None:
            assert out["python"] == out["compiled"]
        else:
            assert out["python"][:-1] == pytest.approx(out["compiled"][:-1])


@compiled
def test_regularize_kernels_agree_on_large_trees():
    from treemetric import _ckernels

    for seed in range(5):
        c = random_perfect_tree(seed, 9, 2, ("X", "Y"))
        ranks = LabelAlphabet(["X", "Y"]).ranks(c.labels)
        assert list(_ckernels.regularize(ranks, 2, 9)) == _pykernels.regularize(ranks, 2, 9)


@compiled
def test_integer_results_are_int():
    with _backend.using("compiled"):
        v = d_bm(random_tree(1, 4), random_tree(2, 4)).value
    assert type(v) is int


def test_fallback_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['treemetric._ckernels'] = None\n"
        "import treemetric as t\n"
        "assert t.available_backends() == ['python']\n"
        "print(t.d_bm(t.parse_tree('W(X(W(W,W),W(W,W)),Z(Z(S,S),Z(Z,Z)))'),"
        " t.parse_tree('X(X(W(X,X),W(X,X)),X(W(W,W),W(W,W)))')).value)\n"
    )
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert r.stdout.strip() == "8"
