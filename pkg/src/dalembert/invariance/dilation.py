"""Dilation invariance of a canonical form ``P(g) = sum_j b_j g^j``.

Write ``z`` for the generator value ``g(xi)``.  A complex probe ``e_xi`` lies in
the kernel exactly when ``P(z) = 0``, and rescaling space-time by ``lam`` sends
it to the probe at ``lam*xi`` with generator value ``lam^2 z``.  The kernel is
therefore stable under every dilation iff ``P`` has no non-zero root, i.e. iff
exactly one ``b_j`` is non-zero.

The certificate for a failure uses ``lam = 2``: with ``R`` the squarefree part
of ``P`` stripped of its zero roots, ``P(4z) mod R`` is non-zero, so some
non-zero root ``z0`` of ``P`` has ``P(4 z0) != 0``.  That residue can be
recomputed by anyone from the coefficients alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..scalar import Scalar
from .canonical import CanonicalForm

Univariate = tuple[Scalar, ...]  # coefficients, constant term first

SCALE = Fraction(2)


def _trim(a) -> list[Scalar]:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def poly_divmod(a: Univariate, b: Univariate) -> tuple[Univariate, Univariate]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    quot = [Scalar(0)] * max(len(a) - len(b) + 1, 0)
    lead_inv = b[-1].inverse()
    while len(a) >= len(b):
        shift = len(a) - len(b)
        factor = a[-1] * lead_inv
        quot[shift] = factor
        for k, c in enumerate(b):
            a[shift + k] = a[shift + k] - factor * c
        a = _trim(a)
    return tuple(quot), tuple(a)


def poly_gcd(a: Univariate, b: Univariate) -> Univariate:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    a, b = tuple(_trim(a)), tuple(_trim(b))
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    lead_inv = a[-1].inverse()
    return tuple(c * lead_inv for c in a)


def poly_derivative(a: Univariate) -> Univariate:
    return tuple(c * k for k, c in enumerate(a) if k)


def squarefree_part(a: Univariate) -> Univariate:
    """Monic product of the distinct linear factors of ``a``."""
    a = tuple(_trim(a))
    if not a:
        raise ValueError("the zero polynomial has no squarefree part")
    quot, _ = poly_divmod(a, poly_gcd(a, poly_derivative(a)))
    lead_inv = quot[-1].inverse()
    return tuple(c * lead_inv for c in quot)


def rescale_argument(a: Univariate, factor: Fraction) -> Univariate:
    """Coefficients of ``z -> a(factor * z)``."""
    return tuple(c * Scalar(factor**k) for k, c in enumerate(a))


@dataclass(frozen=True)
class DilationCertificate:
    """Non-invariance proof for ``cf`` under the dilation by ``scale``."""

    scale: Fraction
    pair: tuple[int, int]
    radical: Univariate
    residue: Univariate

    def verify(self, cf: CanonicalForm) -> bool:
        expected = dilation_certificate(cf)
        return expected is not None and expected == self and any(self.residue)

    def to_json(self) -> dict:
        return {
            "scale": [self.scale.numerator, self.scale.denominator],
            "pair": list(self.pair),
            "radical": [c.to_json() for c in self.radical],
            "residue": [c.to_json() for c in self.residue],
        }


def dilation_certificate(cf: CanonicalForm, scale: Fraction = SCALE) -> DilationCertificate | None:
    """``None`` if ``cf`` is dilation invariant, else the certificate.

    Raises ``ValueError`` on the zero form, which is not an operator of any order.
    """
    nz = cf.nonzero_indices()
    if not nz:
        raise ValueError("all canonical coefficients vanish; the zero symbol has no dilation verdict")
    if len(nz) == 1:
        return None
    low, high = nz[0], nz[-1]
    coeffs = tuple(_trim(cf.coeffs))
    radical = squarefree_part(coeffs[low:])
    _, residue = poly_divmod(rescale_argument(coeffs, scale * scale), radical)
    if not any(residue):  # pragma: no cover - ruled out by the maximal-modulus root argument
        raise AssertionError(f"dilation residue vanished for {cf}")
    return DilationCertificate(scale, (low, high), radical, residue)


def classify_dilation(cf: CanonicalForm) -> DilationCertificate | None:
    return dilation_certificate(cf)
