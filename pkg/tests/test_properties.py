"""Hypothesis-driven checks of the metric and canonical-form properties."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from treemetric.baselines import largest_common_forest, largest_common_subtree
from treemetric.best_match import d_bm, d_bm_star
from treemetric.left_regular import d_lr, left_regularize
from treemetric.oracle import oracle_bm
from treemetric.ordered import d_ot
from treemetric.trees import Tree, swap_children

LABELS = st.sampled_from(["X", "Y", "Z"])


def trees(max_depth=4, arity=2, locks=False):
    def build(depth):
        if depth == 0:
            return st.builds(Tree, LABELS)
        kids = st.lists(build(depth - 1), min_size=0, max_size=arity).map(tuple)
        lock = st.booleans() if locks else st.just(False)
        return st.builds(
            lambda lab, ch, lk: Tree(lab, ch, lk and bool(ch)), LABELS, kids, lock
        )

    return st.integers(0, max_depth).flatmap(build)


PROFILE = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@PROFILE
@given(trees(), trees())
def test_bm_matches_enumeration(a, b):
    assert d_bm(a, b).value == oracle_bm(a, b)


@PROFILE
@given(trees(locks=True), trees(locks=True))
def test_bm_star_matches_enumeration(a, b):
    assert d_bm_star(a, b).value == oracle_bm(a, b, respect_locks=True)


@PROFILE
@given(trees(), trees())
def test_symmetry(a, b):
    for fn in (d_bm, d_lr, d_ot, d_bm_star):
        assert fn(a, b).value == fn(b, a).value


@PROFILE
@given(trees(), trees(), trees())
def test_triangle(a, b, c):
    for fn in (d_bm, d_lr, d_ot):
        assert fn(a, c).value <= fn(a, b).value + fn(b, c).value


@PROFILE
@given(trees(), trees())
def test_order_relations(a, b):
    assert d_ot(a, b).value >= d_bm(a, b).value
    assert d_lr(a, b).value >= d_bm(a, b).value
    assert largest_common_forest(a, b).f >= largest_common_subtree(a, b).f


@PROFILE
@given(trees(arity=3), st.data())
def test_canonical_form_absorbs_swaps(t, data):
    s = t
    for _ in range(data.draw(st.integers(0, 5))):
        internal = [p for p in _paths(s) if len(_at(s, p).children) > 1]
        if not internal:
            break
        p = data.draw(st.sampled_from(internal))
        n = len(_at(s, p).children)
        i = data.draw(st.integers(0, n - 1))
        j = data.draw(st.integers(0, n - 1).filter(lambda x: x != i))
        s = swap_children(s, p, i, j)
    m = t.depth
    assert left_regularize(s, m=m, k=3) == left_regularize(t, m=m, k=3)
    assert d_bm(s, t, arity=3).value == 0


@PROFILE
@given(trees(), trees())
def test_canonical_equality_iff_zero(a, b):
    m = max(a.depth, b.depth)
    same = left_regularize(a, ["X", "Y", "Z"], 2, m) == left_regularize(b, ["X", "Y", "Z"], 2, m)
    assert same == (d_bm(a, b).value == 0)


def _paths(t, path=()):
    if t.children:
        yield path
        for i, c in enumerate(t.children):
            yield from _paths(c, path + (i,))


def _at(t, path):
    for i in path:
        t = t.children[i]
    return t
