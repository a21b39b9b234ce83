"""Independent invariance deciders used to cross-check the canonical classifier.

* :func:`lie_invariant` -- every infinitesimal generator annihilates ``p`` and
  ``p`` is fixed by one reflection per missing connected component.
* :func:`sampling_invariant` -- ``p`` is fixed by a seeded sample of finite
  group elements.  The sample always contains one generic rotation per plane,
  one generic boost per direction and the reflections; a rational rotation or
  boost with ``t`` outside ``{0, +-1}`` has infinite order, so the Zariski
  closure of the subgroup generated by the sample is the whole group and the
  check is exact whenever ``samples`` covers the mandatory part.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..groups import (
    GroupElement,
    Tag,
    generators,
    lie_derivative,
    negation,
    pullback_symbol,
    rational_boost,
    rational_rotation,
    time_reflection,
    transposition,
)
from ..polynomial import Polynomial, monomials_of_degree


def reflections(n: int, tag: Tag) -> list[GroupElement]:
    if tag == "minkowski":
        return [time_reflection(n), negation(n, [1], tag)]
    return [negation(n, [1], tag)]


def lie_invariant(p: Polynomial, tag: Tag) -> bool:
    if tag == "euclidean" and not p.is_spatial():
        return False
    for gen in generators(p.n, tag):
        if lie_derivative(p, gen):
            return False
    return all(pullback_symbol(p, r) == p for r in reflections(p.n, tag))


def _random_parameter(rng: random.Random) -> Fraction:
    while True:
        t = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
        if abs(t) != 1:
            return t


def _random_generator(n: int, tag: Tag, rng: random.Random) -> GroupElement:
    kinds = ["negate"]
    if n >= 2:
        kinds += ["rotation", "rotation", "swap"]
    if tag == "minkowski":
        kinds += ["boost", "boost", "time"]
    kind = rng.choice(kinds)
    if kind == "negate":
        return negation(n, [rng.randint(1, n)], tag)
    if kind == "time":
        return time_reflection(n)
    if kind == "swap":
        k, l = rng.sample(range(1, n + 1), 2)
        return transposition(n, k, l, tag)
    if kind == "rotation":
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        return rational_rotation(n, i, j, _random_parameter(rng), tag)
    return rational_boost(n, rng.randint(1, n), _random_parameter(rng))


def sample_elements(n: int, tag: Tag, samples: int = 20, seed: int = 0) -> list[GroupElement]:
    rng = random.Random(seed)
    out: list[GroupElement] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(rational_rotation(n, i, j, _random_parameter(rng), tag))
    if tag == "minkowski":
        out += [rational_boost(n, i, _random_parameter(rng)) for i in range(1, n + 1)]
        out.append(time_reflection(n))
    out.append(negation(n, [rng.randint(1, n)], tag))
    while len(out) < samples:
        g = _random_generator(n, tag, rng)
        for _ in range(rng.randint(1, 2)):
            g = g @ _random_generator(n, tag, rng)
        out.append(g)
    return out[:samples]


def sampling_invariant(p: Polynomial, tag: Tag, samples: int = 20, seed: int = 0) -> bool:
    if tag == "euclidean" and not p.is_spatial():
        return False
    return all(pullback_symbol(p, g) == p for g in sample_elements(p.n, tag, samples, seed))


def exact_rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a sparse rational matrix (rows as ``{column: value}``)."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                break
            pivot = pivots[col]
            factor = row[col] / pivot[col]
            for c, v in pivot.items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def invariant_space_dimension(n: int, degree: int, tag: Tag = "euclidean") -> int:
    """Dimension of the invariant homogeneous polynomials of ``degree``.

    Solves the linear system "all generators annihilate, reflections fix" on
    coefficient vectors, by exact elimination.
    """
    first = 1 if tag == "euclidean" else 0
    basis = monomials_of_degree(n + 1, degree, first)
    index = {e: k for k, e in enumerate(basis)}
    constraints: dict[tuple, dict[int, Fraction]] = {}

    def add_image(label, column: int, image: Polynomial):
        for e, c in image.terms():
            row = constraints.setdefault((label, e), {})
            row[column] = row.get(column, 0) + c.re

    for e, col in index.items():
        mono = Polynomial.monomial(n, e)
        for gen in generators(n, tag):
            add_image(str(gen), col, lie_derivative(mono, gen))
        for r in reflections(n, tag):
            add_image(r.label, col, pullback_symbol(mono, r) - mono)
    return len(basis) - exact_rank(list(constraints.values()))
