"""Text syntax for operators and symbols.

Grammar (whitespace is ignored between tokens)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := word [uint] | number | '(' expr ')'
    number := uint ('/' uint)?

Operator text uses ``dt``, ``dxK`` for derivatives and ``t``, ``xK`` for base
variables; symbol text uses ``tau`` and ``xiK``.  ``i`` is the imaginary unit
in both.  Coefficients must stand to the left of derivatives: ``x1*dx1`` is
fine, ``dx1*x1`` would need the Leibniz rule and is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..operators import OperatorError, OperatorSpec
from ..polynomial import Exponents, Polynomial
from ..scalar import I, Scalar


class ParseError(ValueError):
    """Bad input text; ``offset`` is a byte offset, ``kind`` is syntax, index or placement."""

    def __init__(self, message: str, offset: int, kind: str = "syntax"):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
        self.kind = kind


@dataclass(frozen=True)
class Vocabulary:
    time: str
    space: str
    time_derivative: str | None
    space_derivative: str | None

    def classify(self, word: str) -> tuple[str, bool] | None:
        """``(role, needs_index)`` for a known word, where role is var, deriv or unit."""
        if word == "i":
            return "unit", False
        if word == self.time:
            return "var", False
        if word == self.space:
            return "var", True
        if word == self.time_derivative:
            return "deriv", False
        if word == self.space_derivative:
            return "deriv", True
        return None


OPERATOR_WORDS = Vocabulary("t", "x", "dt", "dx")
SYMBOL_WORDS = Vocabulary("tau", "xi", None, None)


# syntax tree


@dataclass(frozen=True)
class Literal:
    value: Scalar
    offset: int


@dataclass(frozen=True)
class Variable:
    """Base variable (operator text) or covariable (symbol text); index 0 is time."""

    index: int
    offset: int


@dataclass(frozen=True)
class Derivative:
    index: int
    offset: int


@dataclass(frozen=True)
class Power:
    base: Node
    exponent: int
    offset: int


@dataclass(frozen=True)
class Product:
    factors: tuple[Node, ...]
    offset: int


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, Node], ...]  # (sign, node)
    offset: int


Node = Union[Literal, Variable, Derivative, Power, Product, Sum]


# tokens

_TOKEN = re.compile(r"\s+|(?P<int>\d+)|(?P<word>[A-Za-z]+)|(?P<op>[-+*^/()])")


@dataclass(frozen=True)
class Token:
    kind: str  # int, word, op, end
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        offset = len(text[:pos].encode())
        if match is None:
            ch = text[pos]
            if ch == "." and tokens and tokens[-1].kind == "int":
                raise ParseError("decimal literals are not exact; write fractions like 1/2", offset)
            raise ParseError(f"unexpected character {ch!r}", offset)
        kind = match.lastgroup
        if kind is not None:
            tokens.append(Token(kind, match.group(), offset))
        pos = match.end()
    tokens.append(Token("end", "", len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, words: Vocabulary):
        self.tokens = tokenize(text)
        self.pos = 0
        self.n = n
        self.words = words

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def expect_int(self, what: str) -> Token:
        tok = self.current
        if tok.kind != "int":
            raise ParseError(f"expected {what}, found {_describe(tok)}", tok.offset)
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {_describe(self.current)}", self.current.offset)
        return node

    def expr(self) -> Node:
        start = self.current.offset
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        terms = [(sign, self.term())]
        while self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms), start)

    def term(self) -> Node:
        start = self.current.offset
        factors = [self.factor()]
        while self.at_op("*"):
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors), start)

    def factor(self) -> Node:
        start = self.current.offset
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            exponent = int(self.expect_int("a non-negative integer exponent").text)
            return Power(base, exponent, start)
        return base

    def atom(self) -> Node:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            value = Fraction(int(tok.text))
            if self.at_op("/"):
                self.advance()
                den = self.expect_int("a denominator")
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.offset)
                value /= int(den.text)
            return Literal(Scalar(value), tok.offset)
        if tok.kind == "word":
            return self.word()
        if self.at_op("("):
            self.advance()
            node = self.expr()
            if not self.at_op(")"):
                raise ParseError(f"expected ')', found {_describe(self.current)}", self.current.offset)
            self.advance()
            return node
        raise ParseError(f"expected a number, variable or '(', found {_describe(tok)}", tok.offset)

    def word(self) -> Node:
        tok = self.advance()
        known = self.words.classify(tok.text)
        if known is None:
            raise ParseError(f"unknown name {tok.text!r}", tok.offset)
        role, needs_index = known
        if role == "unit":
            return Literal(I, tok.offset)
        index = 0
        if needs_index:
            index = int(self.expect_int(f"an index after {tok.text!r}").text)
            if not 1 <= index <= self.n:
                raise ParseError(f"{tok.text}{index} is out of range for n={self.n}", tok.offset, "index")
        return Variable(index, tok.offset) if role == "var" else Derivative(index, tok.offset)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "end" else repr(tok.text)


def parse_expression(text: str, n: int, words: Vocabulary = OPERATOR_WORDS) -> Node:
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return _Parser(text, n, words).parse()


# lowering

Lowered = dict[Exponents, Polynomial]  # derivative exponents -> coefficient polynomial


def _add(a: Lowered, b: Lowered, sign: int = 1) -> Lowered:
    out = dict(a)
    for key, c in b.items():
        s = out[key] + c.scale(sign) if key in out else c.scale(sign)
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _mul(a: Lowered, b: Lowered, offset: int) -> Lowered:
    if any(any(k) for k in a) and any(not c.is_constant() for c in b.values()):
        raise ParseError(
            "non-commutative placement: a coefficient variable stands right of a derivative",
            offset,
            "placement",
        )
    out: Lowered = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            key = tuple(x + y for x, y in zip(k1, k2))
            prod = c1 * c2
            out = _add(out, {key: prod}) if prod else out
    return out


def lower(node: Node, n: int) -> Lowered:
    zero_key = (0,) * (n + 1)
    if isinstance(node, Literal):
        return {zero_key: Polynomial.constant(n, node.value)} if node.value else {}
    if isinstance(node, Variable):
        return {zero_key: Polynomial.variable(n, node.index)}
    if isinstance(node, Derivative):
        key = tuple(int(i == node.index) for i in range(n + 1))
        return {key: Polynomial.constant(n, 1)}
    if isinstance(node, Power):
        base = lower(node.base, n)
        out = {zero_key: Polynomial.constant(n, 1)}
        for _ in range(node.exponent):
            out = _mul(out, base, node.offset)
        return out
    if isinstance(node, Product):
        out = lower(node.factors[0], n)
        for f in node.factors[1:]:
            out = _mul(out, lower(f, n), f.offset)
        return out
    out: Lowered = {}
    for sign, term in node.terms:
        out = _add(out, lower(term, n), sign)
    return out


def parse_operator(text: str, n: int) -> OperatorSpec:
    """Lower operator text to an :class:`OperatorSpec` whose order is the highest present."""
    lowered = lower(parse_expression(text, n, OPERATOR_WORDS), n)
    if not lowered:
        raise OperatorError("the expression is the zero operator, which has no order")
    m = max(sum(k) for k in lowered)
    return OperatorSpec(n, m, {(k[0], k[1:]): c for k, c in lowered.items()})


def parse_symbol(text: str, n: int) -> Polynomial:
    """Parse symbol text (``tau``, ``xiK``) into a polynomial."""
    lowered = lower(parse_expression(text, n, SYMBOL_WORDS), n)
    return lowered.get((0,) * (n + 1), Polynomial.zero(n))
