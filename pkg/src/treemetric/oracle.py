"""Brute-force references for the best-match recursions.

Everything here is deliberately naive: enumerate every planar embedding
of both trees, evaluate the ordered distance of every pair, take the
minimum. It shares no code with the recursive kernels, which is the point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator

import numpy as np

from .labels import LabelAlphabet, WeightScheme
from .ordered import alphabet_for
from .trees import CompletedTree, Tree, common_shape, random_tree, to_completed

DEPTH_CAP = 4
ARITY_CAP = 3
EMBEDDING_CAP = 1 << 16


class OracleLimitError(ValueError):
    pass


def _check(c: CompletedTree, max_depth: int):
    if c.depth > max_depth:
        raise OracleLimitError(f"depth {c.depth} exceeds oracle cap {max_depth}")
    if c.arity > ARITY_CAP:
        raise OracleLimitError(f"arity {c.arity} exceeds oracle cap {ARITY_CAP}")


def _embeddings(c: CompletedTree, p: int, respect_locks: bool) -> set[tuple]:
    """Distinct embeddings of the subtree at ``p`` as tuples of levels."""
    me = ((c.labels[p], c.locks[p]),)
    kids = list(c.children_of(p))
    if not kids:
        return {(me,)}
    child_sets = [sorted(_embeddings(c, q, respect_locks)) for q in kids]
    orders = [tuple(range(len(kids)))] if respect_locks and c.locks[p] else permutations(range(len(kids)))
    out = set()
    for order in orders:
        for combo in product(*(child_sets[i] for i in order)):
            levels = [me]
            for depth in range(len(combo[0])):
                levels.append(tuple(v for sub in combo for v in sub[depth]))
            out.add(tuple(levels))
            if len(out) > EMBEDDING_CAP:
                raise OracleLimitError("too many embeddings")
    return out


def enumerate_embeddings(
    tree: Tree | CompletedTree, respect_locks: bool = False, max_depth: int = DEPTH_CAP
) -> Iterator[CompletedTree]:
    """Every ordered tree reachable by child swaps, each exactly once.

    With ``respect_locks`` the children of locked vertices stay in place.
    The input itself is among the results.
    """
    c = tree if isinstance(tree, CompletedTree) else to_completed(tree, *common_shape([tree]))
    _check(c, max_depth)
    for emb in sorted(_embeddings(c, 0, respect_locks)):
        flat = [v for level in emb for v in level]
        yield CompletedTree(c.arity, c.depth, tuple(v[0] for v in flat), tuple(v[1] for v in flat))


def _integerize(values):
    """Scale rationals to a common denominator; floats stay floats."""
    if any(isinstance(v, float) for v in values):
        return [float(v) for v in values], 1.0, np.float64
    denom = math.lcm(*[Fraction(v).denominator for v in values])
    return [int(Fraction(v) * denom) for v in values], denom, np.int64


def oracle_bm(
    t1: Tree | CompletedTree,
    t2: Tree | CompletedTree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    respect_locks: bool = False,
    max_depth: int = DEPTH_CAP,
    *,
    level: int | None = None,
    arity: int | None = None,
):
    """Minimum ordered distance over the cross product of embedding sets."""
    m, k = common_shape([t1, t2], level, arity)
    c1 = to_completed(t1, m, k)
    c2 = to_completed(t2, m, k)
    alphabet = alphabet_for([c1, c2], alphabet)
    weights = weights or WeightScheme()
    e1 = list(enumerate_embeddings(c1, respect_locks, max_depth))
    e2 = list(enumerate_embeddings(c2, respect_locks, max_depth))

    size = len(alphabet.order)
    raw_cost = [alphabet.matrix[i][j] for i in range(size) for j in range(size)]
    raw_w = [weights.coefficient(lv) for lv in c1.levels()]
    cost_vals, denom_c, dtype = _integerize(raw_cost)
    w_vals, denom_w, dtype_w = _integerize(raw_w)
    if dtype_w is np.float64:
        dtype = np.float64
    cost = np.array(cost_vals, dtype=dtype).reshape(size, size)
    w = np.array(w_vals, dtype=dtype)

    a1 = np.array([alphabet.ranks(e.labels) for e in e1], dtype=np.intp)
    a2 = np.array([alphabet.ranks(e.labels) for e in e2], dtype=np.intp)
    best = None
    chunk = max(1, 2_000_000 // (len(e2) * len(c1)))
    for start in range(0, len(e1), chunk):
        block = a1[start : start + chunk]
        vals = (cost[block[:, None, :], a2[None, :, :]] * w).sum(axis=-1).min()
        best = vals if best is None else min(best, vals)
    if dtype is np.float64:
        return float(best) / (denom_c * denom_w)
    value = Fraction(int(best), int(denom_c * denom_w))
    return int(value) if value.denominator == 1 else value


def random_label_metric(rng, labels) -> LabelAlphabet:
    """Random valid metric: distinct labels at distance 1 or 2.

    Any such assignment satisfies the triangle inequality (1 + 1 >= 2).
    """
    order = sorted(set(labels))
    alphabet = LabelAlphabet(order)
    table = {}
    for i, a in enumerate(alphabet.order):
        for b in alphabet.order[i:]:
            d = 0 if a == b else rng.choice((1, 2))
            table[(a, b)] = table[(b, a)] = d
    return LabelAlphabet(order, table, "random")


@dataclass(frozen=True)
class Counterexample:
    t1: Tree
    t2: Tree
    alphabet: LabelAlphabet
    weights: WeightScheme
    respect_locks: bool
    fast: object
    brute: object

    def __str__(self):
        return (
            f"{self.t1}\n{self.t2}\n"
            f"# metric={self.alphabet.name} weights={self.weights} locks={self.respect_locks} "
            f"recursion={self.fast} enumeration={self.brute}"
        )


def random_case(rng, max_depth: int, locks: bool, labels=("X", "Y", "Z")):
    """One randomized differential-test configuration."""
    p_lock = 0.5 if locks else 0.0
    t1 = random_tree(rng, rng.randint(0, max_depth), 2, labels, p_lock)
    t2 = random_tree(rng, rng.randint(0, max_depth), 2, labels, p_lock)
    alphabet = random_label_metric(rng, labels) if rng.random() < 0.5 else LabelAlphabet(sorted(labels))
    weights = WeightScheme("exponential", Fraction(1, 2)) if rng.random() < 0.5 else WeightScheme()
    return t1, t2, alphabet, weights


def check_random(seed, trials: int, max_depth: int = DEPTH_CAP, locks: bool = False):
    """Compare the recursion with enumeration on random pairs.

    Returns the first :class:`Counterexample`, or ``None`` when all agree.
    """
    from .best_match import d_bm, d_bm_star

    rng = random.Random(seed)
    fast_fn = d_bm_star if locks else d_bm
    for _ in range(trials):
        t1, t2, alphabet, weights = random_case(rng, max_depth, locks)
        fast = fast_fn(t1, t2, alphabet, weights).value
        brute = oracle_bm(t1, t2, alphabet, weights, respect_locks=locks, max_depth=max_depth)
        if fast != brute:
            return Counterexample(t1, t2, alphabet, weights, locks, fast, brute)
    return None
