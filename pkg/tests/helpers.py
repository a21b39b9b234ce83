"""Shared random generators for the unit tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from dalembert.polynomial import Polynomial
from dalembert.scalar import Scalar

fractions = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
scalars = st.builds(Scalar, fractions, fractions)


@st.composite
def polynomials(draw, n=None, max_degree=4, max_terms=6):
    if n is None:
        n = draw(st.integers(1, 3))
    exps = st.lists(st.integers(0, max_degree), min_size=n + 1, max_size=n + 1).filter(
        lambda e: sum(e) <= max_degree
    )
    terms = draw(st.dictionaries(exps.map(tuple), scalars, max_size=max_terms))
    return Polynomial(n, terms)


def random_polynomial(rng: random.Random, n: int, max_degree: int, max_terms: int = 6) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * (n + 1)
        for _ in range(d):
            e[rng.randrange(n + 1)] += 1
        terms[tuple(e)] = Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), rng.choice((0, 0, rng.randint(-3, 3))))
    return Polynomial(n, terms)


def random_matrix(rng: random.Random, size: int) -> list[list[Fraction]]:
    return [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(size)] for _ in range(size)]
