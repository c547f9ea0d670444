"""Ordered tree metric and the report type shared by every distance."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import _backend
from .labels import LabelAlphabet, Number, WeightScheme
from .trees import CompletedTree, Tree, TreeError, common_shape, to_completed


@dataclass(frozen=True)
class DistanceReport:
    metric: str
    value: Number
    level: int | None = None
    arity: int | None = None
    weights: str | None = None
    order: str | None = None
    label_metric: str | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("distance must be non-negative")

    def __float__(self):
        return float(self.value)

    def formatted_value(self, as_float: bool = False) -> str:
        return format_number(self.value, as_float)

    def as_dict(self, as_float: bool = False) -> dict[str, Any]:
        out = {
            "metric": self.metric,
            "value": self.formatted_value(as_float),
            "level": self.level,
            "arity": self.arity,
            "weights": self.weights,
            "order": self.order,
            "label_metric": self.label_metric,
        }
        if self.notes:
            out["notes"] = "; ".join(self.notes)
        return {k: v for k, v in out.items() if v is not None}


def format_number(value, as_float: bool = False) -> str:
    if as_float:
        return repr(float(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def alphabet_for(trees, alphabet: LabelAlphabet | None) -> LabelAlphabet:
    labels = set()
    for t in trees:
        labels |= set(t.labels) if isinstance(t, CompletedTree) else t.labels()
    if alphabet is None:
        return LabelAlphabet.default(labels)
    for a in labels:
        alphabet.index(a)
    return alphabet


def prepare(t1, t2, alphabet, weights, m=None, k=None):
    """Complete both trees to a common shape and encode them as rank arrays."""
    m, k = common_shape([t1, t2], m, k)
    c1 = to_completed(t1, m, k)
    c2 = to_completed(t2, m, k)
    alphabet = alphabet_for([c1, c2], alphabet)
    weights = weights or WeightScheme()
    return c1, c2, alphabet, weights


def d_ot(
    t1: Tree | CompletedTree,
    t2: Tree | CompletedTree,
    alphabet: LabelAlphabet | None = None,
    weights: WeightScheme | None = None,
    *,
    level: int | None = None,
    arity: int | None = None,
) -> DistanceReport:
    """Weighted sum of label distances over positionally matched vertices.

    Plain trees are first completed to a shared level and arity. Two
    completed trees must already have identical shape.
    """
    if isinstance(t1, CompletedTree) and isinstance(t2, CompletedTree):
        if (t1.arity, t1.depth) != (t2.arity, t2.depth):
            raise TreeError(
                f"shape mismatch: ({t1.arity},{t1.depth}) vs ({t2.arity},{t2.depth})"
            )
    c1, c2, alphabet, weights = prepare(t1, t2, alphabet, weights, level, arity)
    value = ordered_value(c1, c2, alphabet, weights)
    return DistanceReport(
        "ot", value, c1.depth, c1.arity, str(weights), None, alphabet.name
    )


def ordered_value(c1: CompletedTree, c2: CompletedTree, alphabet, weights) -> Number:
    w = weights.per_level(c1.depth)
    kern, cast = _backend.choose(alphabet.matrix, w)
    raw = kern.ordered_distance(
        alphabet.ranks(c1.labels), alphabet.ranks(c2.labels), c1.arity, c1.depth, alphabet.matrix, w
    )
    return cast(raw)
