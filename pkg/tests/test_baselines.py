import random
from fractions import Fraction

import pytest

from treemetric.baselines import (
    canonical_code,
    d_bu,
    d_st,
    largest_common_forest,
    largest_common_subtree,
)
from treemetric.fixtures import TABLE, tree
from treemetric.trees import parse_tree, random_tree

from helpers import random_swaps


@pytest.mark.parametrize("pair", sorted(TABLE))
def test_table_values(pair):
    _, _, forest, bu, subtree, st = TABLE[pair]
    t1, t2 = tree(pair[0]), tree(pair[1])
    assert largest_common_forest(t1, t2).f == forest
    assert largest_common_subtree(t1, t2).f == subtree
    assert d_bu(t1, t2).value == Fraction(bu)
    assert d_st(t1, t2).value == Fraction(st)


def test_canonical_code_ignores_order():
    rng = random.Random(1)
    for _ in range(30):
        t = random_tree(rng, 4, 3)
        assert canonical_code(random_swaps(t, rng)) == canonical_code(t)


def test_identical_trees():
    t = tree("T_A")
    assert d_bu(t, t).value == 0 and d_st(t, t).value == 0


def test_matched_pairs_are_isomorphic():
    t1, t2 = tree("T_7"), tree("T_10")
    res = largest_common_forest(t1, t2)
    from treemetric.trees import vertex_at

    total = 0
    for p1, p2 in res.matched_pairs:
        a, b = vertex_at(t1, p1), vertex_at(t2, p2)
        assert canonical_code(a) == canonical_code(b)
        total += a.size
    assert total == res.f


def test_forest_beats_greedy():
    # X(Y,Y) plus the separate Y leaf, which sits under different parents
    t1 = parse_tree("A(X(Y,Y),Y)")
    t2 = parse_tree("B(X(Y,Y),C(Y))")
    assert largest_common_forest(t1, t2).f == 4


def test_forest_at_least_subtree():
    rng = random.Random(2)
    for _ in range(100):
        a, b = random_tree(rng, 4), random_tree(rng, 4)
        assert largest_common_forest(a, b).f >= largest_common_subtree(a, b).f
        assert d_bu(a, b).value <= d_st(a, b).value


def test_report_notes():
    r = d_bu(tree("T_1"), tree("T_2"))
    assert r.formatted_value() == "3/7"
    assert r.notes == ("f=4", "n1=7", "n2=7")
