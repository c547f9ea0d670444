"""Label alphabets (metric + total order) and depth weight schemes."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Callable, Iterable, Mapping, Sequence

from .trees import NULL

Number = int | Fraction | float


class AlphabetError(ValueError):
    pass


def exact(value) -> Number:
    """Normalize a number: integral values become ``int``, decimal strings
    become :class:`~fractions.Fraction`, floats are kept as floats."""
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, bool) or not isinstance(value, Real):
        raise AlphabetError(f"not a real number: {value!r}")
    if isinstance(value, int):
        return value
    return float(value)


def _close(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))
    return a == b


class LabelAlphabet:
    """Label universe with a metric and a strict total order.

    ``order`` lists the labels ascending; the null label is appended as the
    greatest element when absent. ``metric`` is either a callable or a
    mapping from label pairs to distances; ``None`` selects the trivial
    metric (1 between distinct labels). The metric axioms are checked on
    construction.
    """

    def __init__(
        self,
        order: Iterable[str],
        metric: Callable[[str, str], Number] | Mapping[tuple[str, str], Number] | None = None,
        name: str | None = None,
    ):
        order = list(order)
        if NULL not in order:
            order.append(NULL)
        if len(set(order)) != len(order):
            raise AlphabetError("duplicate label in total order")
        self.order: tuple[str, ...] = tuple(order)
        self.members: tuple[str, ...] = tuple(a for a in order if a != NULL)
        self.rank = {a: i for i, a in enumerate(self.order)}
        if metric is None:
            self.name = name or "trivial"
            self.matrix = tuple(
                tuple(0 if i == j else 1 for j in range(len(order))) for i in range(len(order))
            )
        else:
            self.name = name or "custom"
            lookup = metric if callable(metric) else (lambda a, b: metric[(a, b)])
            self.matrix = tuple(
                tuple(exact(lookup(a, b)) for b in order) for a in order
            )
        self._validate()

    @classmethod
    def default(cls, labels: Iterable[str]) -> LabelAlphabet:
        """Trivial metric, labels ascending by token, null label greatest."""
        return cls(sorted(set(labels) - {NULL}))

    def _validate(self):
        m = self.matrix
        n = len(m)
        for i in range(n):
            if m[i][i] != 0:
                raise AlphabetError(f"d({self.order[i]},{self.order[i]}) must be 0")
            for j in range(n):
                if m[i][j] < 0:
                    raise AlphabetError("label distances must be non-negative")
                if not _close(m[i][j], m[j][i]):
                    raise AlphabetError(
                        f"label metric not symmetric for {self.order[i]},{self.order[j]}"
                    )
                if i != j and m[i][j] == 0:
                    raise AlphabetError(
                        f"distinct labels {self.order[i]},{self.order[j]} at distance 0"
                    )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if m[i][k] > m[i][j] + m[j][k] and not _close(m[i][k], m[i][j] + m[j][k]):
                        raise AlphabetError(
                            "triangle inequality fails for "
                            f"{self.order[i]},{self.order[j]},{self.order[k]}"
                        )

    @property
    def is_trivial(self) -> bool:
        return all(
            v == (0 if i == j else 1) for i, row in enumerate(self.matrix) for j, v in enumerate(row)
        )

    @property
    def diameter(self) -> Number:
        return max(max(row) for row in self.matrix)

    def distance(self, a: str, b: str) -> Number:
        return self.matrix[self.index(a)][self.index(b)]

    def index(self, label: str) -> int:
        try:
            return self.rank[label]
        except KeyError:
            raise AlphabetError(f"label {label!r} is not in the alphabet") from None

    def ranks(self, labels: Sequence[str]) -> list[int]:
        try:
            return list(map(self.rank.__getitem__, labels))
        except KeyError as exc:
            raise AlphabetError(f"label {exc.args[0]!r} is not in the alphabet") from None

    def compare(self, a: str, b: str) -> int:
        return (self.index(a) > self.index(b)) - (self.index(a) < self.index(b))

    def with_order(self, order: Sequence[str]) -> LabelAlphabet:
        """Same metric under a different total order."""
        order = list(order)
        if NULL not in order:
            order.append(NULL)
        if set(order) != set(self.order):
            raise AlphabetError("new order must cover the same labels")
        return LabelAlphabet(order, self.distance, self.name)

    def order_string(self) -> str:
        return "<".join(self.order)

    def __repr__(self):
        return f"LabelAlphabet({self.order_string()}, metric={self.name})"


def read_order(path) -> list[str]:
    """One label per line, ascending; blank lines and ``#`` comments skipped."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
    if not out:
        raise AlphabetError(f"{path}: empty order file")
    return out


def read_metric_csv(path) -> dict[tuple[str, str], Number]:
    """Label metric table: first row and column are labels.

    Missing entries involving the null label default to 1.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if any(c.strip() for c in r)]
    if not rows:
        raise AlphabetError(f"{path}: empty metric file")
    cols = [c.strip() for c in rows[0][1:]]
    table: dict[tuple[str, str], Number] = {}
    for r in rows[1:]:
        a = r[0].strip()
        if len(r) - 1 != len(cols):
            raise AlphabetError(f"{path}: row {a!r} has {len(r) - 1} entries, expected {len(cols)}")
        for b, cell in zip(cols, r[1:]):
            table[(a, b)] = exact(cell)
    labels = set(cols) | {a for a, _ in table}
    labels.add(NULL)
    for a in labels:
        for b in labels:
            if (a, b) in table:
                continue
            if a == b:
                table[(a, b)] = 0
            elif NULL in (a, b):
                table[(a, b)] = 1
            else:
                raise AlphabetError(f"{path}: missing entry d({a},{b})")
    return table


def load_alphabet(order_path=None, metric_path=None, labels: Iterable[str] = ()) -> LabelAlphabet:
    """Build an alphabet from optional order/metric files plus observed labels."""
    metric = read_metric_csv(metric_path) if metric_path else None
    if order_path:
        order = read_order(order_path)
    elif metric is not None:
        order = sorted({a for a, _ in metric} - {NULL})
    else:
        order = sorted(set(labels) - {NULL})
    missing = set(labels) - set(order) - {NULL}
    if missing:
        raise AlphabetError(f"labels not in alphabet: {', '.join(sorted(missing))}")
    if metric is not None:
        full = set(order) | {NULL}
        absent = sorted(a for a in full if (a, a) not in metric)
        if absent:
            raise AlphabetError(f"metric file has no entries for: {', '.join(absent)}")
        name = str(metric_path)
    else:
        name = None
    return LabelAlphabet(order, metric, name)


@dataclass(frozen=True)
class WeightScheme:
    """Per-depth coefficient: constant 1, or ``base ** depth``."""

    kind: str = "constant"
    base: Number = 1

    def __post_init__(self):
        if self.kind not in ("constant", "exponential"):
            raise ValueError(f"unknown weight scheme {self.kind!r}")
        object.__setattr__(self, "base", exact(self.base))
        if self.base <= 0:
            raise ValueError("exponential base must be positive")

    @classmethod
    def parse(cls, spec: str) -> WeightScheme:
        """``constant`` or ``exp:BETA`` / ``exponential:BETA``."""
        spec = spec.strip()
        if spec == "constant":
            return cls()
        kind, _, beta = spec.partition(":")
        if kind in ("exp", "exponential") and beta:
            return cls("exponential", Fraction(beta))
        raise ValueError(f"bad weight scheme {spec!r}")

    def coefficient(self, depth: int) -> Number:
        if self.kind == "constant":
            return 1
        return exact(self.base**depth)

    def per_level(self, m: int) -> list[Number]:
        return [self.coefficient(d) for d in range(m + 1)]

    def __str__(self):
        return "constant" if self.kind == "constant" else f"exponential:{self.base}"


def check_labels(alphabet: LabelAlphabet, labels: Iterable[str]):
    for a in labels:
        if a not in alphabet.rank:
            raise AlphabetError(f"label {a!r} is not in the alphabet")


__all__ = [
    "AlphabetError",
    "LabelAlphabet",
    "WeightScheme",
    "exact",
    "load_alphabet",
    "read_metric_csv",
    "read_order",
]
