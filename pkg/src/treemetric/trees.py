"""Rooted labeled trees: data model, text format, completion and generation.

Trees are immutable. A :class:`Tree` is the free-form input shape (any
branching up to the arity cap); a :class:`CompletedTree` is the perfect
k-ary tree obtained by padding with the null label, stored as flat
breadth-first arrays so the distance kernels can address vertices by index.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

NULL = "N"
MAX_ARITY = 8

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")


class TreeError(ValueError):
    """Raised for malformed trees or invalid tree operations."""


class TreeSyntaxError(TreeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Tree:
    """A rooted ordered tree whose vertices carry a label and a lock flag.

    Child order is the planar embedding. ``locked`` fixes that order for the
    lock-aware semimetric; every other metric ignores it.
    """

    label: str
    children: tuple[Tree, ...] = ()
    locked: bool = False

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if self.locked and not self.children:
            raise TreeError(f"lock mark on leaf {self.label!r}")

    @property
    def depth(self) -> int:
        if not self.children:
            return 0
        return 1 + max(c.depth for c in self.children)

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @property
    def branching(self) -> int:
        """Largest number of children of any vertex."""
        return max([len(self.children)] + [c.branching for c in self.children])

    def vertices(self) -> Iterator[Tree]:
        """Pre-order traversal."""
        yield self
        for c in self.children:
            yield from c.vertices()

    def labels(self) -> set[str]:
        return {v.label for v in self.vertices()}

    def has_locks(self) -> bool:
        return any(v.locked for v in self.vertices())

    def unlocked(self) -> Tree:
        """Copy of the tree with every lock mark removed."""
        return Tree(self.label, tuple(c.unlocked() for c in self.children))

    def __str__(self) -> str:
        return serialize(self)


def serialize(tree: Tree) -> str:
    out = tree.label + ("*" if tree.locked else "")
    if tree.children:
        out += "(" + ",".join(serialize(c) for c in tree.children) + ")"
    return out


class _Parser:
    def __init__(self, text: str, allow_null: bool, max_arity: int):
        self.text = text
        self.pos = 0
        self.allow_null = allow_null
        self.max_arity = max_arity

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise TreeSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def tree(self) -> Tree:
        self.skip()
        start = self.pos
        m = _LABEL_RE.match(self.text, self.pos)
        if m is None:
            found = self.peek() or "end of input"
            raise TreeSyntaxError(f"expected label, found {found!r}", self.pos)
        label = m.group()
        if label == NULL and not self.allow_null:
            raise TreeSyntaxError(f"reserved null label {NULL!r}", start)
        self.pos = m.end()
        locked = False
        if self.peek() == "*":
            self.pos += 1
            locked = True
        children = []
        if self.peek() == "(":
            self.pos += 1
            children.append(self.tree())
            while self.peek() == ",":
                self.pos += 1
                children.append(self.tree())
            self.expect(")")
            if len(children) > self.max_arity:
                raise TreeSyntaxError(
                    f"vertex {label!r} has {len(children)} children, "
                    f"maximum arity is {self.max_arity}",
                    start,
                )
        if locked and not children:
            raise TreeSyntaxError(f"lock mark on leaf {label!r}", start)
        return Tree(label, tuple(children), locked)


def parse_tree(text: str, *, allow_null: bool = False, max_arity: int = MAX_ARITY) -> Tree:
    """Parse the text format ``label['*']['(' tree (',' tree)* ')']``.

    Whitespace between tokens is ignored. The null label ``N`` is rejected
    unless ``allow_null`` is set (used when reading back completed trees).

    >>> str(parse_tree("X(Y, Z*(Y,Z))"))
    'X(Y,Z*(Y,Z))'
    """
    p = _Parser(text, allow_null, max_arity)
    tree = p.tree()
    if p.peek():
        raise TreeSyntaxError(f"unexpected {p.peek()!r} after tree", p.pos)
    return tree


def read_tree(path, **kwargs) -> Tree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read(), **kwargs)


def swap_children(tree: Tree, path: Sequence[int], i: int, j: int) -> Tree:
    """Exchange the subtrees at child positions ``i`` and ``j`` of a vertex.

    The vertex is addressed by ``path``, the sequence of child indices
    leading to it from the root (``()`` is the root).
    """
    if not path:
        kids = list(tree.children)
        n = len(kids)
        if not (0 <= i < n and 0 <= j < n):
            raise TreeError(f"child index out of range for vertex with {n} children")
        kids[i], kids[j] = kids[j], kids[i]
        return Tree(tree.label, tuple(kids), tree.locked)
    head, rest = path[0], path[1:]
    if not 0 <= head < len(tree.children):
        raise TreeError(f"path index {head} out of range")
    kids = list(tree.children)
    kids[head] = swap_children(kids[head], rest, i, j)
    return Tree(tree.label, tuple(kids), tree.locked)


def internal_paths(tree: Tree, path: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """Paths of all vertices with at least two children."""
    if len(tree.children) >= 2:
        yield path
    for idx, c in enumerate(tree.children):
        yield from internal_paths(c, path + (idx,))


def vertex_at(tree: Tree, path: Sequence[int]) -> Tree:
    for idx in path:
        tree = tree.children[idx]
    return tree


def level_offset(k: int, level: int) -> int:
    """BFS index of the first vertex on ``level`` of a perfect k-ary tree."""
    return (k**level - 1) // (k - 1)


def perfect_size(k: int, m: int) -> int:
    return level_offset(k, m + 1)


@dataclass(frozen=True)
class CompletedTree:
    """A perfect k-ary tree of depth m in breadth-first array form.

    The vertex at ``(level, index)`` lives at BFS position
    ``level_offset(k, level) + index``; the children of position ``p`` are
    ``k*p + 1 .. k*p + k``.
    """

    arity: int
    depth: int
    labels: tuple[str, ...]
    locks: tuple[bool, ...] = field(default=())

    def __post_init__(self):
        if self.arity < 2:
            raise TreeError("arity must be at least 2")
        n = perfect_size(self.arity, self.depth)
        if not self.locks:
            object.__setattr__(self, "locks", (False,) * n)
        if len(self.labels) != n or len(self.locks) != n:
            raise TreeError(
                f"perfect {self.arity}-ary tree of depth {self.depth} needs {n} vertices"
            )

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n_internal(self) -> int:
        return level_offset(self.arity, self.depth)

    def position(self, level: int, index: int) -> int:
        if not 0 <= level <= self.depth or not 0 <= index < self.arity**level:
            raise TreeError(f"no vertex at level {level}, index {index}")
        return level_offset(self.arity, level) + index

    def label_at(self, level: int, index: int) -> str:
        return self.labels[self.position(level, index)]

    def children_of(self, p: int) -> range:
        if p >= self.n_internal:
            return range(0)
        return range(self.arity * p + 1, self.arity * p + self.arity + 1)

    def level_of(self, p: int) -> int:
        level = 0
        while level_offset(self.arity, level + 1) <= p:
            level += 1
        return level

    def levels(self) -> list[int]:
        """Depth of every position, in BFS order."""
        out = []
        for level in range(self.depth + 1):
            out.extend([level] * self.arity**level)
        return out

    @property
    def string(self) -> str:
        return format_labels(self.labels)

    def to_tree(self, p: int = 0) -> Tree:
        """Nested form including the N padding (serializes with explicit N)."""
        kids = tuple(self.to_tree(c) for c in self.children_of(p))
        return Tree(self.labels[p], kids, self.locks[p])

    def permuted(self, src: Sequence[int]) -> CompletedTree:
        """Tree whose position ``p`` holds the vertex formerly at ``src[p]``."""
        return CompletedTree(
            self.arity,
            self.depth,
            tuple(self.labels[s] for s in src),
            tuple(self.locks[s] for s in src),
        )

    def __str__(self) -> str:
        return serialize(self.to_tree())


def complete(tree: Tree, m: int | None = None, k: int | None = None) -> CompletedTree:
    """Level-m completion to a perfect k-ary tree.

    Missing children are appended on the right with label ``N``; padded
    vertices are never locked. ``m`` defaults to the tree depth and ``k`` to
    its branching factor (at least 2).
    """
    if m is None:
        m = tree.depth
    if k is None:
        k = max(2, tree.branching)
    if m < tree.depth:
        raise TreeError(f"completion level {m} is below tree depth {tree.depth}")
    if k < max(2, tree.branching):
        raise TreeError(f"arity {k} is below observed branching factor {tree.branching}")
    labels: list[str] = []
    locks: list[bool] = []
    frontier: list[Tree | None] = [tree]
    for level in range(m + 1):
        nxt: list[Tree | None] = []
        for v in frontier:
            if v is None:
                labels.append(NULL)
                locks.append(False)
                if level < m:
                    nxt.extend([None] * k)
            else:
                labels.append(v.label)
                locks.append(v.locked)
                if level < m:
                    nxt.extend(v.children)
                    nxt.extend([None] * (k - len(v.children)))
        frontier = nxt
    return CompletedTree(k, m, tuple(labels), tuple(locks))


def label_string(tree: CompletedTree | Tree) -> tuple[str, ...]:
    """Breadth-first label sequence (root first, left to right within a level)."""
    if isinstance(tree, Tree):
        tree = complete(tree)
    return tree.labels


def format_labels(labels: Sequence[str]) -> str:
    """Join a label sequence; single-character labels are concatenated."""
    if all(len(s) == 1 for s in labels):
        return "".join(labels)
    return " ".join(labels)


def common_shape(
    trees: Sequence[Tree | CompletedTree], m: int | None = None, k: int | None = None
) -> tuple[int, int]:
    """Completion level and arity shared by a group of trees."""
    depths, branch = [], [2]
    for t in trees:
        if isinstance(t, CompletedTree):
            depths.append(t.depth)
            branch.append(t.arity)
        else:
            depths.append(t.depth)
            branch.append(t.branching)
    need_m, need_k = max(depths), max(branch)
    if m is None:
        m = need_m
    elif m < need_m:
        raise TreeError(f"completion level {m} is below tree depth {need_m}")
    if k is None:
        k = need_k
    elif k < need_k:
        raise TreeError(f"arity {k} is below observed branching factor {need_k}")
    return m, k


def to_completed(t: Tree | CompletedTree, m: int, k: int) -> CompletedTree:
    if isinstance(t, CompletedTree):
        if t.depth == m and t.arity == k:
            return t
        if t.arity != k:
            raise TreeError("completed tree has a different arity")
        t = t.to_tree()
    return complete(t, m, k)


def random_tree(
    seed,
    max_depth: int,
    k: int = 2,
    alphabet: Sequence[str] = ("X", "Y", "Z"),
    lock_probability: float = 0.0,
) -> Tree:
    """Random tree with independent uniform labels.

    Each of the ``k`` potential children of a vertex above ``max_depth``
    exists with probability 1/2; the root is given at least one child when
    ``max_depth > 0``. Non-leaf vertices are locked with
    ``lock_probability``.
    """
    if max_depth < 0:
        raise TreeError("max_depth must be non-negative")
    if not 0 <= lock_probability <= 1:
        raise TreeError("lock_probability must lie in [0, 1]")
    labels = [a for a in alphabet if a != NULL]
    if not labels:
        raise TreeError("empty alphabet")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def grow(depth: int) -> Tree:
        label = rng.choice(labels)
        kids = []
        if depth < max_depth:
            present = [rng.random() < 0.5 for _ in range(k)]
            if depth == 0 and not any(present):
                present[rng.randrange(k)] = True
            kids = [grow(depth + 1) for flag in present if flag]
        locked = bool(kids) and rng.random() < lock_probability
        return Tree(label, tuple(kids), locked)

    return grow(0)


def random_perfect_tree(
    seed,
    depth: int,
    k: int = 2,
    alphabet: Sequence[str] = ("X", "Y", "Z"),
    lock_probability: float = 0.0,
) -> CompletedTree:
    """Perfect k-ary tree with i.i.d. uniform labels (benchmark input)."""
    labels = [a for a in alphabet if a != NULL]
    if not labels:
        raise TreeError("empty alphabet")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = perfect_size(k, depth)
    n_internal = level_offset(k, depth)
    lab = tuple(rng.choice(labels) for _ in range(n))
    locks = tuple(p < n_internal and rng.random() < lock_probability for p in range(n))
    return CompletedTree(k, depth, lab, locks)
