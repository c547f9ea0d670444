"""Kernel selection: compiled core when importable, pure Python otherwise.

The compiled kernels compute in float64, so they are only used when every
label distance and weight is an int or a float. Integer inputs give
integer sums well below 2**53, which are converted back to ``int``; any
:class:`~fractions.Fraction` input routes to the pure-Python kernels to
keep the result exact.
"""

from __future__ import annotations

import contextlib
from fractions import Fraction

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_preference = "auto"


def available() -> list[str]:
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def set_backend(name: str):
    """Force ``"python"`` or ``"compiled"``, or restore ``"auto"``."""
    global _preference
    if name not in ("auto", "python", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _ckernels is None:
        raise RuntimeError("compiled kernels are not available")
    _preference = name


def get_backend() -> str:
    return _preference


@contextlib.contextmanager
def using(name: str):
    old = _preference
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)


def _numeric_kind(values) -> str:
    kind = "int"
    for v in values:
        if isinstance(v, Fraction):
            return "fraction"
        if isinstance(v, float):
            kind = "float"
    return kind


def choose(cost, weight):
    """Return ``(module, cast)`` for the given numeric inputs.

    ``cast`` converts the kernel's raw result to the reported value type.
    """
    flat = [v for row in cost for v in row] + list(weight)
    kind = _numeric_kind(flat)
    if _preference == "python" or _ckernels is None or kind == "fraction":
        if _preference == "compiled" and kind == "fraction":
            raise RuntimeError("compiled kernels cannot compute with exact fractions")
        return _pykernels, _identity
    if kind == "int":
        return _ckernels, _to_int
    return _ckernels, float


def regularizer():
    if _preference == "python" or _ckernels is None:
        return _pykernels.regularize
    return _ckernels.regularize


def _identity(x):
    return x


def _to_int(x):
    return int(round(x))
