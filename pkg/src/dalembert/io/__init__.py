"""Text and JSON front end: the operator DSL, file loading and corpus generation."""

from .dsl import ParseError, parse_expression, parse_operator, parse_symbol
from .generate import gen_instances
from .jsonio import dumps, load_operator, load_symbol

__all__ = [
    "ParseError",
    "dumps",
    "gen_instances",
    "load_operator",
    "load_symbol",
    "parse_expression",
    "parse_operator",
    "parse_symbol",
]
