"""Best-match metric and its lock-aware semimetric variant.

Both are computed by the same top-down recursion. For a pair of subtrees
the cost is the weighted root label distance plus the cheapest way of
pairing up their children; for binary trees that is the smaller of the
straight pairing and the crossed pairing, for k-ary trees the minimum over
all k! child correspondences. Every pair of same-level subtrees is visited
exactly once, giving quadratic work in the vertex count.

The semimetric differs only at vertices where *both* current roots carry a
lock mark: there the straight pairing is forced.
"""

from __future__ import annotations

from itertools import permutations

from . import _backend
from .labels import LabelAlphabet, WeightScheme
from .ordered import DistanceReport, prepare
from .trees import CompletedTree, Tree

PERMUTATION_CAP = 8


class ArityError(ValueError):
    pass


def _run(c1: CompletedTree, c2: CompletedTree, alphabet, weights, respect_locks, binary=True):
    k = c1.arity
    if k > PERMUTATION_CAP:
        raise ArityError(f"arity {k} exceeds the permutation cap of {PERMUTATION_CAP}")
    w = weights.per_level(c1.depth)
    kern, cast = _backend.choose(alphabet.matrix, w)
    a = alphabet.ranks(c1.labels)
    b = alphabet.ranks(c2.labels)
    if k == 2 and binary:
        raw = kern.best_match_binary(a, b, c1.locks, c2.locks, c1.depth, alphabet.matrix, w, respect_locks)
    else:
        raw = kern.best_match_kary(a, b, c1.locks, c2.locks, k, c1.depth, alphabet.matrix, w, respect_locks)
    return cast(raw)


def d_bm(
    t1: Tree | CompletedTree,
    t2: Tree | CompletedTree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    level: int | None = None,
    arity: int | None = None,
) -> DistanceReport:
    """Minimum ordered distance over all planar embeddings of both trees.

    Lock marks are ignored.

    >>> from treemetric.trees import parse_tree
    >>> d_bm(parse_tree("X(Y,Z(Y,Z))"), parse_tree("Y(Y)")).value
    4
    """
    c1, c2, alphabet, weights = prepare(t1, t2, alphabet, weights, level, arity)
    value = _run(c1, c2, alphabet, weights, respect_locks=False)
    return DistanceReport("bm", value, c1.depth, c1.arity, str(weights), None, alphabet.name)


def d_bm_star(
    t1: Tree | CompletedTree,
    t2: Tree | CompletedTree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    level: int | None = None,
    arity: int | None = None,
) -> DistanceReport:
    """Best-match semimetric: child order is fixed wherever both roots are locked."""
    c1, c2, alphabet, weights = prepare(t1, t2, alphabet, weights, level, arity)
    value = _run(c1, c2, alphabet, weights, respect_locks=True)
    return DistanceReport("bmstar", value, c1.depth, c1.arity, str(weights), None, alphabet.name)


def best_match_kary_value(t1, t2, alphabet=None, weights=None, *, respect_locks=False, level=None, arity=None):
    """Value through the k! permutation recursion even for binary trees."""
    c1, c2, alphabet, weights = prepare(t1, t2, alphabet, weights, level, arity)
    return _run(c1, c2, alphabet, weights, respect_locks, binary=False)


def equivalent(t1: Tree | CompletedTree, t2: Tree | CompletedTree) -> bool:
    """True iff one tree becomes the other by swapping subtrees (locks ignored)."""
    return d_bm(t1, t2).value == 0


def semi_equivalent(t1: Tree | CompletedTree, t2: Tree | CompletedTree) -> bool:
    """True iff unlocked swaps take both trees to a common plain ordered tree."""
    return d_bm_star(t1, t2).value == 0


def witness(
    t1: Tree | CompletedTree,
    t2: Tree | CompletedTree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    respect_locks: bool = False,
    level: int | None = None,
    arity: int | None = None,
) -> tuple[CompletedTree, CompletedTree]:
    """One optimal pair of embeddings realizing the best-match value.

    The recursion is rerun in pure Python; on ties the straight pairing
    (then the lexicographically first permutation) wins. Children of the
    second tree are permuted, except below a vertex where only the second
    tree is locked, in which case the first tree's children move instead.
    """
    c1, c2, alphabet, weights = prepare(t1, t2, alphabet, weights, level, arity)
    k, depth = c1.arity, c1.depth
    if k > PERMUTATION_CAP:
        raise ArityError(f"arity {k} exceeds the permutation cap of {PERMUTATION_CAP}")
    a = alphabet.ranks(c1.labels)
    b = alphabet.ranks(c2.labels)
    cost = alphabet.matrix
    w = weights.per_level(depth)
    perms = list(permutations(range(k)))
    memo: dict[tuple[int, int], tuple] = {}

    def solve(p1, p2, lvl):
        key = (p1, p2)
        if key in memo:
            return memo[key]
        d = w[lvl] * cost[a[p1]][b[p2]]
        if lvl == depth:
            memo[key] = (d, None)
            return memo[key]
        base1, base2 = k * p1 + 1, k * p2 + 1
        sub = [[solve(base1 + i, base2 + j, lvl + 1)[0] for j in range(k)] for i in range(k)]
        candidates = perms[:1] if respect_locks and c1.locks[p1] and c2.locks[p2] else perms
        best, best_perm = None, None
        for perm in candidates:
            s = sum(sub[i][perm[i]] for i in range(k))
            if best is None or s < best:
                best, best_perm = s, perm
        memo[key] = (d + best, best_perm)
        return memo[key]

    solve(0, 0, 0)
    src1 = [0] * len(a)
    src2 = [0] * len(b)

    def place(p1, p2, q, lvl):
        # q is the output position shared by both embeddings
        src1[q] = p1
        src2[q] = p2
        if lvl == depth:
            return
        perm = memo[(p1, p2)][1]
        move_first = respect_locks and c2.locks[p2] and not c1.locks[p1]
        for i in range(k):
            if move_first:
                inv = perm.index(i)
                child1, child2 = k * p1 + 1 + inv, k * p2 + 1 + i
            else:
                child1, child2 = k * p1 + 1 + i, k * p2 + 1 + perm[i]
            place(child1, child2, k * q + 1 + i, lvl + 1)

    place(0, 0, 0, 0)
    return c1.permuted(src1), c2.permuted(src2)


__all__ = [
    "ArityError",
    "PERMUTATION_CAP",
    "best_match_kary_value",
    "d_bm",
    "d_bm_star",
    "equivalent",
    "semi_equivalent",
    "witness",
]
