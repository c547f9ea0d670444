"""Pure-Python kernels over breadth-first arrays of perfect k-ary trees.

Every function here has a compiled twin in ``_ckernels.pyx`` with the same
signature. These versions work with any numeric type (int, Fraction,
float), so they are also the exact path for rational label metrics and
weights.

Array conventions: ``a``/``b`` hold label ranks, ``cost[i][j]`` is the label
distance between ranks ``i`` and ``j``, ``weight[l]`` is the coefficient of
depth ``l``, children of position ``p`` are ``k*p+1 .. k*p+k``.
"""

from __future__ import annotations

from collections import deque
from functools import cmp_to_key
from itertools import permutations


def ordered_distance(a, b, k, depth, cost, weight):
    total = 0
    p = 0
    for level in range(depth + 1):
        w = weight[level]
        for _ in range(k**level):
            total += w * cost[a[p]][b[p]]
            p += 1
    return total


def best_match_binary(a, b, lock_a, lock_b, depth, cost, weight, respect_locks):
    """Two-branch recursion: identity pairing C1 versus crossed pairing C2."""

    def bm(p1, p2, level):
        d = weight[level] * cost[a[p1]][b[p2]]
        if level == depth:
            return d
        l1 = 2 * p1 + 1
        l2 = 2 * p2 + 1
        nxt = level + 1
        c1 = bm(l1, l2, nxt) + bm(l1 + 1, l2 + 1, nxt)
        c2 = bm(l1, l2 + 1, nxt) + bm(l1 + 1, l2, nxt)
        if respect_locks and lock_a[p1] and lock_b[p2]:
            return d + c1
        return d + (c1 if c1 <= c2 else c2)

    return bm(0, 0, 0)


def best_match_kary(a, b, lock_a, lock_b, k, depth, cost, weight, respect_locks):
    """Recursion over all k! child correspondences (k*k subtree pairs each)."""
    perms = list(permutations(range(k)))
    identity = perms[0]

    def bm(p1, p2, level):
        d = weight[level] * cost[a[p1]][b[p2]]
        if level == depth:
            return d
        base1 = k * p1 + 1
        base2 = k * p2 + 1
        nxt = level + 1
        sub = [[bm(base1 + i, base2 + j, nxt) for j in range(k)] for i in range(k)]
        if respect_locks and lock_a[p1] and lock_b[p2]:
            return d + sum(sub[i][identity[i]] for i in range(k))
        return d + min(sum(row[pi] for row, pi in zip(sub, perm)) for perm in perms)

    return bm(0, 0, 0)


def regularize(a, k, depth, stop=0):
    """Left-regularization order of one tree.

    Returns ``src`` such that the canonical tree holds, at BFS position
    ``p``, the vertex originally at ``src[p]``. Children are sorted
    ascending by the breadth-first label string of their subtrees, one
    level at a time from the bottom; comparisons stop at the first
    difference. Levels above ``stop`` are left untouched.
    """
    n_internal = (k**depth - 1) // (k - 1)
    child = [list(range(k * p + 1, k * p + k + 1)) for p in range(n_internal)]

    def compare(x, y):
        qa = deque([x])
        qb = deque([y])
        while qa:
            u = qa.popleft()
            v = qb.popleft()
            if a[u] != a[v]:
                return -1 if a[u] < a[v] else 1
            if u < n_internal:
                qa.extend(child[u])
                qb.extend(child[v])
        return 0

    key = cmp_to_key(compare)
    for level in range(depth - 1, stop - 1, -1):
        start = (k**level - 1) // (k - 1)
        for p in range(start, start + k**level):
            kids = child[p]
            if k == 2:
                if compare(kids[0], kids[1]) > 0:
                    kids.reverse()
            else:
                kids.sort(key=key)

    src = [0]
    for i in range(n_internal):
        src.extend(child[src[i]])
    return src
