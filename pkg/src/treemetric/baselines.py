"""Bottom-up and subtree distances from largest common forests/subtrees.

Both work on the raw (uncompleted) trees and treat them as unordered. A
complete subtree is a vertex with all of its descendants; two complete
subtrees match when they are isomorphic as rooted unordered labeled trees,
decided by comparing canonical codes.

The common forest search is exact and exhaustive. It enumerates, for each
tree, every multiset of codes carried by a set of pairwise disjoint
complete subtrees (an antichain of roots), then takes the best overlap.
Fine for the small trees these baselines exist for; not meant to scale.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .ordered import DistanceReport
from .trees import Tree


@dataclass(frozen=True)
class CommonStructureResult:
    f: int
    matched_pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = field(default=())


def canonical_code(tree: Tree) -> str:
    """Isomorphism key: label followed by the sorted child codes.

    >>> canonical_code(Tree("X", (Tree("Z"), Tree("Y")))) == canonical_code(Tree("X", (Tree("Y"), Tree("Z"))))
    True
    """
    if not tree.children:
        return tree.label
    return tree.label + "(" + ",".join(sorted(canonical_code(c) for c in tree.children)) + ")"


def _subtrees(tree: Tree, path=()):
    """(path, code, size) for every complete subtree, children before parents."""
    out = []
    codes = []
    size = 1
    for i, c in enumerate(tree.children):
        sub = _subtrees(c, path + (i,))
        out.extend(sub)
        codes.append(sub[-1][1])
        size += sub[-1][2]
    code = tree.label if not codes else tree.label + "(" + ",".join(sorted(codes)) + ")"
    out.append((path, code, size))
    return out


def _antichain_multisets(tree: Tree, path=()):
    """Every code multiset realizable by disjoint complete subtrees of ``tree``.

    Returns a dict mapping a frozen multiset to one witness list of paths.
    """
    options = {frozenset({(canonical_code(tree), 1)}): [path]}
    # every child option set contains the empty multiset, hence so does the product
    child_sets = [_antichain_multisets(c, path + (i,)) for i, c in enumerate(tree.children)]
    if not child_sets:
        options[frozenset()] = []
        return options
    for combo in product(*(cs.items() for cs in child_sets)):
        total = Counter()
        paths = []
        for ms, ps in combo:
            total.update(dict(ms))
            paths.extend(ps)
        key = frozenset(total.items())
        options.setdefault(key, paths)
    return options


def largest_common_forest(t1: Tree, t2: Tree) -> CommonStructureResult:
    """Most vertices covered by disjoint complete subtrees matched across trees."""
    sizes = {code: size for _, code, size in _subtrees(t1) + _subtrees(t2)}
    opts1 = _antichain_multisets(t1)
    opts2 = _antichain_multisets(t2)
    by_code2 = {}
    for ms2, paths2 in opts2.items():
        by_code2[ms2] = (dict(ms2), paths2)
    best = (0, None, None)
    for ms1, paths1 in opts1.items():
        c1 = dict(ms1)
        for ms2, (c2, paths2) in by_code2.items():
            f = sum(min(n, c2.get(code, 0)) * sizes[code] for code, n in c1.items())
            if f > best[0]:
                best = (f, paths1, paths2)
    f, paths1, paths2 = best
    pairs = _pair_up(t1, t2, paths1 or [], paths2 or [])
    return CommonStructureResult(f, pairs)


def _pair_up(t1, t2, paths1, paths2):
    code1 = {p: c for p, c, _ in _subtrees(t1)}
    code2 = {p: c for p, c, _ in _subtrees(t2)}
    pool: dict[str, list] = {}
    for p in sorted(paths2):
        pool.setdefault(code2[p], []).append(p)
    pairs = []
    for p in sorted(paths1):
        bucket = pool.get(code1[p])
        if bucket:
            pairs.append((p, bucket.pop(0)))
    return tuple(pairs)


def largest_common_subtree(t1: Tree, t2: Tree) -> CommonStructureResult:
    """Largest single complete subtree present in both trees (0 if none)."""
    seen = {}
    for path, code, size in _subtrees(t2):
        seen.setdefault(code, path)
    best = CommonStructureResult(0)
    for path, code, size in _subtrees(t1):
        if code in seen and size > best.f:
            best = CommonStructureResult(size, ((path, seen[code]),))
    return best


def _report(name: str, f: int, t1: Tree, t2: Tree) -> DistanceReport:
    n = max(t1.size, t2.size)
    value = 1 - Fraction(f, n)
    value = int(value) if value.denominator == 1 else value
    return DistanceReport(name, value, notes=(f"f={f}", f"n1={t1.size}", f"n2={t2.size}"))


def d_bu(t1: Tree, t2: Tree) -> DistanceReport:
    """1 - f/max(n1, n2) with f the largest common forest size."""
    return _report("bu", largest_common_forest(t1, t2).f, t1, t2)


def d_st(t1: Tree, t2: Tree) -> DistanceReport:
    """1 - f/max(n1, n2) with f the largest common subtree size."""
    return _report("st", largest_common_subtree(t1, t2).f, t1, t2)
