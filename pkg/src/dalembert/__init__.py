"""Exact symmetry classification of linear differential operators on space-time.

An operator is reduced to its symbol, a polynomial over the Gaussian
rationals; translation, rotation, Lorentz and dilation invariance are then
decided by exact polynomial identities, with a concrete witness whenever an
invariance fails.
"""

from .groups import GroupElement, pullback_symbol, rational_boost, rational_rotation, verify_membership
from .invariance import CanonicalForm, ClassificationReport, Witness, classify_operator, classify_symbol
from .io import ParseError, parse_operator, parse_symbol
from .operators import OperatorSpec, constant_symbol, d_alembertian, laplacian
from .polynomial import Polynomial
from .scalar import Scalar

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "ClassificationReport",
    "GroupElement",
    "OperatorSpec",
    "ParseError",
    "Polynomial",
    "Scalar",
    "Witness",
    "classify_operator",
    "classify_symbol",
    "constant_symbol",
    "d_alembertian",
    "laplacian",
    "parse_operator",
    "parse_symbol",
    "pullback_symbol",
    "rational_boost",
    "rational_rotation",
    "verify_membership",
]
