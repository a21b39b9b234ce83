"""Reading operators and symbols from DSL text or JSON, and writing JSON."""

from __future__ import annotations

import json
import re

from ..operators import OperatorError, OperatorSpec
from ..polynomial import DimensionError, Polynomial
from .dsl import parse_operator, parse_symbol


_PAIR = re.compile(r"\[\s+(-?\d+),\s+(-?\d+)\s+\]")


def dumps(data) -> str:
    """Stable JSON text: fixed indentation, key order as built, ``[num, den]`` pairs on one line."""
    return _PAIR.sub(r"[\1, \2]", json.dumps(data, indent=2, ensure_ascii=True))


def _looks_like_json(text: str) -> bool:
    return text.lstrip().startswith(("{", "["))


def load_operator(text: str, n: int | None) -> OperatorSpec:
    """Operator from JSON (``n`` checked if given) or from DSL text (``n`` required)."""
    if _looks_like_json(text):
        try:
            op = OperatorSpec.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise OperatorError(f"invalid JSON: {exc}") from exc
        if n is not None and op.n != n:
            raise DimensionError(f"JSON operator has n={op.n} but --dim {n} was given")
        return op
    if n is None:
        raise OperatorError("--dim is required for operator text")
    return parse_operator(text, n)


def load_symbol(text: str, n: int | None) -> Polynomial:
    if _looks_like_json(text):
        try:
            p = Polynomial.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        if n is not None and p.n != n:
            raise DimensionError(f"JSON symbol has n={p.n} but --dim {n} was given")
        return p
    if n is None:
        raise ValueError("--dim is required for symbol text")
    return parse_symbol(text, n)
