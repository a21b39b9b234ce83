"""Seeded random operators for the test corpus.

Kinds:

* ``invariant`` -- ``sum_j b_j g^j`` with ``g`` the Minkowski or Euclidean form;
  the number of coefficients is uniform in ``1..m//2 + 1`` and the top one is
  non-zero, so ``m`` is an upper bound on the order.
* ``perturbed`` -- an invariant instance plus a random non-zero multiple of one
  monomial of degree ``1..m`` that is not itself invariant.
* ``variable`` -- an invariant instance with a non-constant polynomial added to
  one of its coefficients, so translation invariance fails.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from ..groups import TAGS, Tag
from ..invariance.canonical import CanonicalForm
from ..invariance.crosscheck import lie_invariant
from ..operators import OperatorSpec, operator_of
from ..polynomial import Exponents, Polynomial, monomials_of_degree
from ..scalar import Scalar

KINDS = ("invariant", "perturbed", "variable")
MAX_DIM = 6
MAX_ORDER = 10


def random_scalar(rng: random.Random, nonzero: bool = False) -> Scalar:
    while True:
        re = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        im = Fraction(rng.randint(-9, 9), rng.randint(1, 6)) if rng.random() < 0.5 else Fraction(0)
        s = Scalar(re, im)
        if s or not nonzero:
            return s


def random_canonical(rng: random.Random, space: Tag, m: int) -> CanonicalForm:
    length = rng.randint(1, m // 2 + 1)
    coeffs = [random_scalar(rng) if rng.random() < 0.7 else Scalar(0) for _ in range(length - 1)]
    coeffs.append(random_scalar(rng, nonzero=True))
    return CanonicalForm(space, tuple(coeffs))


@lru_cache(maxsize=None)
def perturbation_monomials(space: Tag, n: int, m: int) -> tuple[Exponents, ...]:
    """Monomials of degree ``1..m`` that are not invariant on their own."""
    first = 1 if space == "euclidean" else 0
    out = []
    for d in range(1, m + 1):
        for e in monomials_of_degree(n + 1, d, first):
            if not lie_invariant(Polynomial.monomial(n, e), space):
                out.append(e)
    return tuple(out)


def _random_base_polynomial(rng: random.Random, space: Tag, n: int) -> Polynomial:
    first = 1 if space == "euclidean" else 0
    candidates = [e for d in (1, 2) for e in monomials_of_degree(n + 1, d, first)]
    out = Polynomial.zero(n)
    while not out:
        for e in rng.sample(candidates, rng.randint(1, min(3, len(candidates)))):
            out = out + Polynomial.monomial(n, e, random_scalar(rng, nonzero=True))
    return out


def _validate(space: str, n: int, m: int, count: int, kind: str):
    if space not in TAGS:
        raise ValueError(f"unknown space {space!r}; expected one of {TAGS}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"n must be in 1..{MAX_DIM}, got {n}")
    if not 0 <= m <= MAX_ORDER:
        raise ValueError(f"m must be in 0..{MAX_ORDER}, got {m}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if kind == "perturbed" and count and not perturbation_monomials(space, n, m):
        raise ValueError(
            f"no perturbed instance exists for space={space}, n={n}, m={m}: "
            "every monomial of degree 1..m is invariant (or there are none)"
        )


def gen_instances(seed: int, space: Tag, n: int, m: int, count: int, kind: str) -> list[OperatorSpec]:
    _validate(space, n, m, count, kind)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        symbol = random_canonical(rng, space, m).expand(n)
        if kind == "perturbed":
            e = rng.choice(perturbation_monomials(space, n, m))
            # invariants form a subspace, so adding a non-invariant monomial cannot cancel
            symbol = symbol + Polynomial.monomial(n, e, random_scalar(rng, nonzero=True))
        op = operator_of(symbol)
        if kind == "variable":
            keys = op.keys()
            key = rng.choice(keys)
            coeffs = dict(op.items())
            coeffs[key] = coeffs[key] + _random_base_polynomial(rng, space, n)
            op = OperatorSpec(n, op.m, coeffs)
        out.append(op)
    return out
