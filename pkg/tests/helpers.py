"""Shared generators for property tests."""

import random

from treemetric.trees import internal_paths, swap_children, vertex_at

# filled by the acceptance tests, printed by the terminal summary hook
ACCEPTANCE_LINES: list[str] = []


def random_swaps(tree, rng: random.Random, count: int = 6, unlocked_only: bool = False):
    """Apply ``count`` random child swaps at internal vertices."""
    for _ in range(count):
        paths = [p for p in internal_paths(tree) if not (unlocked_only and vertex_at(tree, p).locked)]
        paths = [p for p in paths if len(vertex_at(tree, p).children) > 1]
        if not paths:
            return tree
        p = rng.choice(paths)
        n = len(vertex_at(tree, p).children)
        i, j = rng.sample(range(n), 2)
        tree = swap_children(tree, p, i, j)
    return tree


def mutate_label(tree, rng: random.Random, labels=("X", "Y", "Z")):
    """Relabel one uniformly chosen vertex with a different label."""
    from treemetric.trees import Tree

    target = rng.randrange(tree.size)
    counter = [0]

    def walk(t):
        me = counter[0]
        counter[0] += 1
        kids = tuple(walk(c) for c in t.children)
        label = t.label
        if me == target:
            label = rng.choice([a for a in labels if a != t.label])
        return Tree(label, kids, t.locked)

    return walk(tree)
