"""Constructive refutations of invariance.

A :class:`Witness` is a group element ``g`` and a covector ``xi`` with
``p(g^T xi) != p(xi)``; both sides are stored so anyone can re-evaluate them.
When the search budget runs out before a concrete element is found, the
search falls back to an :class:`AlgebraicWitness`: a generator whose Lie
derivative of ``p`` is a non-zero polynomial.

Candidate order (fixed, so witnesses are reproducible):

1. reflections: ``tau -> -tau`` (Minkowski only), ``xi_k -> -xi_k`` for
   k = 1..n, then ``-I`` (Minkowski only);
2. swaps ``xi_k <-> xi_l`` for k < l in lex order;
3. for each ``t`` in 1/2, 1/3, 2/3, 2, 3, 3/2: rotations in planes (i, j)
   in lex order, then boosts along i = 1..n;
4. products ``a @ b`` of two elements from steps 1-3, pairs in lex order,
   skipping products equal to the identity;
5. steps 3 for further ``t`` tiers: ``a/d`` then ``d/a`` for d = 4, 5, ...
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..groups import (
    GroupElement,
    Tag,
    generators,
    identity,
    lie_derivative,
    minus_identity,
    negation,
    pullback_symbol,
    rational_boost,
    rational_rotation,
    time_reflection,
    transposition,
)
from ..operators import find_nonzero_point
from ..polynomial import Polynomial
from ..scalar import Scalar

DEFAULT_BUDGET = 256

FIRST_TIER = tuple(Fraction(x) for x in ("1/2", "1/3", "2/3", "2", "3", "3/2"))


@dataclass(frozen=True)
class Witness:
    element: GroupElement
    covector: tuple[Scalar, ...]
    lhs: Scalar
    rhs: Scalar

    def verify(self, p: Polynomial) -> bool:
        pulled = pullback_symbol(p, self.element)
        return (
            pulled.evaluate(self.covector) == self.lhs
            and p.evaluate(self.covector) == self.rhs
            and self.lhs != self.rhs
        )

    def to_json(self) -> dict:
        return {
            "kind": "group",
            "element": self.element.to_json(),
            "covector": [c.to_json() for c in self.covector],
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }

    def describe(self) -> str:
        cov = ", ".join(str(c) for c in self.covector)
        return f"{self.element.label or 'element'} at covector ({cov}): {self.lhs} != {self.rhs}"


@dataclass(frozen=True)
class AlgebraicWitness:
    """``generator`` applied to the symbol gives the non-zero ``polynomial``."""

    generator: str
    polynomial: Polynomial

    def verify(self, p: Polynomial) -> bool:
        return _algebraic_image(p, self.generator) == self.polynomial and bool(self.polynomial)

    def to_json(self) -> dict:
        return {"kind": "algebraic", "generator": self.generator, "polynomial": self.polynomial.to_json()}

    def describe(self) -> str:
        return f"{self.generator} maps the symbol to {self.polynomial}"


def _algebraic_image(p: Polynomial, name: str) -> Polynomial:
    for gen in generators(p.n, "minkowski"):
        if gen.name == name:
            return lie_derivative(p, gen)
    if name == "time_reflection":
        return pullback_symbol(p, time_reflection(p.n)) - p
    if name == "space_reflection":
        return pullback_symbol(p, negation(p.n, [1])) - p
    raise ValueError(f"unknown generator {name!r}")


def witness_from_element(p: Polynomial, element: GroupElement) -> Witness | None:
    """Witness for ``element`` if it moves ``p``, else ``None``."""
    pulled = pullback_symbol(p, element)
    diff = pulled - p
    if diff.is_zero():
        return None
    pt = find_nonzero_point(diff, element.size)
    covector = tuple(Scalar(x) for x in pt)
    return Witness(element, covector, pulled.evaluate(covector), p.evaluate(covector))


def parameter_tiers() -> Iterator[tuple[Fraction, ...]]:
    yield FIRST_TIER
    d = 4
    while True:
        low = [Fraction(a, d) for a in range(1, d) if gcd(a, d) == 1]
        yield tuple(low + [1 / x for x in low])
        d += 1


def _continuous(n: int, tag: Tag, ts) -> Iterator[GroupElement]:
    for t in ts:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                yield rational_rotation(n, i, j, t, tag)
        if tag == "minkowski":
            for i in range(1, n + 1):
                yield rational_boost(n, i, t)


def candidate_elements(n: int, tag: Tag) -> Iterator[GroupElement]:
    """The fixed enumeration described in the module docstring."""
    base: list[GroupElement] = []
    if tag == "minkowski":
        base.append(time_reflection(n))
    base += [negation(n, [k], tag) for k in range(1, n + 1)]
    if tag == "minkowski":
        base.append(minus_identity(n, tag))
    base += [transposition(n, k, l, tag) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    tiers = parameter_tiers()
    base += list(_continuous(n, tag, next(tiers)))
    yield from base
    ident = identity(base[0].size)
    for a in base:
        for b in base:
            ab = a @ b
            if ab.entries != ident:
                yield ab
    for tier in tiers:
        yield from _continuous(n, tag, tier)


def witness_search(p: Polynomial, tag: Tag, budget: int = DEFAULT_BUDGET) -> Witness | AlgebraicWitness:
    """First candidate element that moves ``p``, with the first covector that shows it.

    Euclidean search requires a spatial symbol.  Raises ``ValueError`` if ``p``
    is invariant (nothing to refute).
    """
    if budget < 1:
        raise ValueError("witness budget must be >= 1")
    if tag == "euclidean" and not p.is_spatial():
        raise ValueError("Euclidean witness search needs a symbol without tau")
    for count, element in enumerate(candidate_elements(p.n, tag)):
        if count >= budget:
            break
        w = witness_from_element(p, element)
        if w is not None:
            return w
    return algebraic_witness(p, tag)


def algebraic_witness(p: Polynomial, tag: Tag) -> AlgebraicWitness:
    for gen in generators(p.n, tag):
        image = lie_derivative(p, gen)
        if image:
            return AlgebraicWitness(gen.name, image)
    names = ["time_reflection", "space_reflection"] if tag == "minkowski" else ["space_reflection"]
    for name in names:
        image = _algebraic_image(p, name)
        if image:
            return AlgebraicWitness(name, image)
    raise ValueError("symbol is invariant; there is nothing to refute")
