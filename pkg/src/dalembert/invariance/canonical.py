"""Rotation and Lorentz classification of constant-coefficient symbols.

Both classifiers reduce invariance to exact polynomial identities.

Rotations (spatial symbol ``p``): split ``p`` into homogeneous parts ``p_d``.
Odd parts must vanish; an even part must equal ``p_d(e_1) * |xi|^d``.

Lorentz (symbol ``p`` in ``tau, xi``):

1. write ``p = sum_j p_j(xi) tau^j``;
2. each ``p_j`` must be rotation invariant, ``p_j = sum_k b_jk |xi|^{2k}``
   (a failure is refuted by the embedded spatial element ``1 (+) R``);
3. regroup into homogeneous ``p_l = sum_{j+2k=l} b_jk tau^j |xi|^{2k}``;
4. odd ``l`` parts must vanish (refuted by ``-I``);
5. an even part must equal ``c_l * q^{l/2}`` where ``c_l`` is its ``tau^l``
   coefficient and ``q = tau^2 - |xi|^2`` (refuted by the witness search,
   which lands on a boost);
6. the canonical coefficients are ``b_j = c_{2j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..groups import Tag, embed_spatial, minus_identity
from ..operators import euclidean_form, minkowski_form
from ..polynomial import Polynomial, format_coefficient, join_signed
from ..scalar import Scalar
from .crosscheck import lie_invariant
from .witness import DEFAULT_BUDGET, AlgebraicWitness, Witness, witness_from_element, witness_search

GENERATOR_NAMES = {"minkowski": "box", "euclidean": "lap"}


class DeciderDisagreement(AssertionError):
    """The canonical classifier and the Lie-derivative decider disagree."""


@lru_cache(maxsize=None)
def generator_power(tag: Tag, n: int, k: int) -> Polynomial:
    if k == 0:
        return Polynomial.constant(n, 1)
    base = minkowski_form(n) if tag == "minkowski" else euclidean_form(n)
    return generator_power(tag, n, k - 1) * base


@dataclass(frozen=True)
class CanonicalForm:
    """``sum_j coeffs[j] * g^j`` with ``g = q`` (Minkowski) or ``|xi|^2`` (Euclidean)."""

    space: Tag
    coeffs: tuple[Scalar, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def expand(self, n: int) -> Polynomial:
        out = Polynomial.zero(n)
        for k, b in enumerate(self.coeffs):
            if b:
                out = out + generator_power(self.space, n, k).scale(b)
        return out

    def nonzero_indices(self) -> list[int]:
        return [k for k, b in enumerate(self.coeffs) if b]

    def __str__(self):
        g = GENERATOR_NAMES[self.space]
        pieces = []
        for k in reversed(range(len(self.coeffs))):
            b = self.coeffs[k]
            if not b:
                continue
            gen = "" if k == 0 else (g if k == 1 else f"{g}^{k}")
            sign, mag = format_coefficient(b, standalone=not gen)
            pieces.append((sign, "*".join(x for x in (mag, gen) if x)))
        return join_signed(pieces)

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "b": [b.to_json() for b in self.coeffs],
            "form": str(self),
            "zero": self.is_zero,
        }


def classify_rotation(
    p: Polynomial, budget: int = DEFAULT_BUDGET, crosscheck: bool = True
) -> CanonicalForm | Witness | AlgebraicWitness:
    """Decide O(n) invariance of a spatial symbol."""
    if not p.is_spatial():
        raise ValueError("rotation classification needs a spatial symbol; this one mentions tau")
    n = p.n
    deg = p.degree()
    coeffs = [Scalar(0)] * (deg // 2 + 1 if deg >= 0 else 0)
    e1 = [0] * n
    e1[0] = 1
    invariant = True
    for d, part in p.homogeneous_parts():
        if d % 2:
            invariant = False
            break
        b = part.evaluate(e1)
        if part != generator_power("euclidean", n, d // 2).scale(b):
            invariant = False
            break
        coeffs[d // 2] = b
    result = CanonicalForm("euclidean", tuple(coeffs)) if invariant else witness_search(p, "euclidean", budget)
    if crosscheck and lie_invariant(p, "euclidean") != invariant:
        raise DeciderDisagreement(f"rotation deciders disagree on {p}")
    return result


def classify_lorentz(
    p: Polynomial, budget: int = DEFAULT_BUDGET, crosscheck: bool = True
) -> CanonicalForm | Witness | AlgebraicWitness:
    """Decide O(1,n) invariance of a space-time symbol; see the module docstring."""
    result = _classify_lorentz(p, budget)
    if crosscheck and lie_invariant(p, "minkowski") != isinstance(result, CanonicalForm):
        raise DeciderDisagreement(f"Lorentz deciders disagree on {p}")
    return result


def _classify_lorentz(p: Polynomial, budget: int):
    n = p.n
    # steps 1-2: tau-split and per-coefficient rotation invariance
    b: dict[tuple[int, int], Scalar] = {}
    for j, pj in p.collect(0).items():
        res = classify_rotation(pj, budget, crosscheck=False)
        if isinstance(res, Witness):
            w = witness_from_element(p, embed_spatial(res.element))
            if w is None:  # pragma: no cover - p_j moved implies p moved
                raise AssertionError("embedded spatial witness failed to move the symbol")
            return w
        if isinstance(res, AlgebraicWitness):
            return witness_search(p, "minkowski", budget)
        for k, bk in enumerate(res.coeffs):
            if bk:
                b[(j, k)] = bk
    # step 3: regroup into homogeneous parts in (tau, xi)
    regrouped: dict[int, Polynomial] = {}
    for (j, k), bk in b.items():
        term = generator_power("euclidean", n, k).times_variable_power(0, j).scale(bk)
        ell = j + 2 * k
        regrouped[ell] = regrouped[ell] + term if ell in regrouped else term
    # step 4: parity
    if any(ell % 2 and part for ell, part in regrouped.items()):
        w = witness_from_element(p, minus_identity(n, "minkowski"))
        if w is None:  # pragma: no cover
            raise AssertionError("-I failed to move a symbol with an odd part")
        return w
    # step 5: each even part is a multiple of q^(l/2)
    deg = p.degree()
    coeffs = [Scalar(0)] * (deg // 2 + 1 if deg >= 0 else 0)
    for ell, part in sorted(regrouped.items()):
        if not part:
            continue
        top = [0] * (n + 1)
        top[0] = ell
        c = part.coefficient(top)
        if part != generator_power("minkowski", n, ell // 2).scale(c):
            return witness_search(p, "minkowski", budget)
        coeffs[ell // 2] = c
    return CanonicalForm("minkowski", tuple(coeffs))


def classify_symbol(p: Polynomial, tag: Tag, budget: int = DEFAULT_BUDGET, crosscheck: bool = True):
    if tag == "minkowski":
        return classify_lorentz(p, budget, crosscheck)
    return classify_rotation(p, budget, crosscheck)
