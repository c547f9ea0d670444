"""Left-regular canonical form and the left-regular metric."""

from __future__ import annotations

import enum
from typing import Sequence

from . import _backend
from .labels import LabelAlphabet, WeightScheme
from .ordered import DistanceReport, alphabet_for, ordered_value
from .trees import CompletedTree, Tree, common_shape, to_completed


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(s1: Sequence[str], s2: Sequence[str], order: LabelAlphabet | Sequence[str]) -> Ordering:
    """Lexicographic comparison of equal-length label strings.

    ``order`` is an alphabet or an ascending list of labels. Strings are
    either sequences of labels or ``str`` of one-character labels.

    >>> lex_compare("XZN", "XNY", ["Z", "Y", "X", "N"])
    <Ordering.LESS: -1>
    """
    if len(s1) != len(s2):
        raise ValueError(f"label strings differ in length ({len(s1)} vs {len(s2)})")
    rank = order.rank if isinstance(order, LabelAlphabet) else {a: i for i, a in enumerate(order)}
    for x, y in zip(s1, s2):
        if x != y:
            return Ordering.LESS if rank[x] < rank[y] else Ordering.GREATER
    return Ordering.EQUAL


def left_regularize(
    tree: Tree | CompletedTree,
    alphabet: LabelAlphabet | Sequence[str] | None = None,
    k: int | None = None,
    m: int | None = None,
    *,
    stop: int = 0,
) -> CompletedTree:
    """Canonical embedding: children sorted ascending by subtree label string.

    The tree is completed to level ``m`` first, then each level from the
    bottom up has its child subtrees stably sorted. Lock marks travel with
    their vertices but do not restrict the sort. ``stop`` halts the pass
    after sorting the children of level ``stop``, leaving the upper levels
    as they were (the intermediate stages of the procedure).
    """
    m, k = common_shape([tree], m, k)
    c = to_completed(tree, m, k)
    if alphabet is None or not isinstance(alphabet, LabelAlphabet):
        alphabet = LabelAlphabet(alphabet) if alphabet is not None else alphabet_for([c], None)
    if not 0 <= stop <= max(m - 1, 0):
        raise ValueError(f"stop level {stop} outside 0..{max(m - 1, 0)}")
    src = _backend.regularizer()(alphabet.ranks(c.labels), k, m, stop)
    return c.permuted(src)


def is_left_regular(c: CompletedTree, alphabet: LabelAlphabet) -> bool:
    """Every vertex's children are ascending by subtree label string."""
    for p in range(c.n_internal):
        kids = list(c.children_of(p))
        strings = [subtree_string(c, q) for q in kids]
        for s1, s2 in zip(strings, strings[1:]):
            if lex_compare(s1, s2, alphabet) is Ordering.GREATER:
                return False
    return True


def subtree_string(c: CompletedTree, p: int) -> tuple[str, ...]:
    """Breadth-first label string of the subtree rooted at position ``p``."""
    out = []
    block = [p]
    while block:
        out.extend(c.labels[q] for q in block)
        block = [ch for q in block for ch in c.children_of(q)]
    return tuple(out)


def d_lr(
    t1: Tree | CompletedTree,
    t2: Tree | CompletedTree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    level: int | None = None,
    arity: int | None = None,
) -> DistanceReport:
    """Ordered distance between the two left-regularized forms.

    The value depends on the alphabet's total order, which is recorded in
    the report.
    """
    m, k = common_shape([t1, t2], level, arity)
    c1 = to_completed(t1, m, k)
    c2 = to_completed(t2, m, k)
    alphabet = alphabet_for([c1, c2], alphabet)
    weights = weights or WeightScheme()
    r1 = left_regularize(c1, alphabet, k, m)
    r2 = left_regularize(c2, alphabet, k, m)
    value = ordered_value(r1, r2, alphabet, weights)
    notes = ()
    if c1.locks != (False,) * len(c1) or c2.locks != (False,) * len(c2):
        notes = ("lock marks ignored",)
    return DistanceReport(
        "lr", value, m, k, str(weights), alphabet.order_string(), alphabet.name, notes
    )
