"""Invariance deciders, canonical forms and witnesses."""

from .canonical import (
    CanonicalForm,
    DeciderDisagreement,
    classify_lorentz,
    classify_rotation,
    classify_symbol,
)
from .crosscheck import invariant_space_dimension, lie_invariant, sampling_invariant
from .dilation import DilationCertificate, classify_dilation
from .report import ClassificationReport, classify_operator
from .witness import AlgebraicWitness, Witness, witness_search

__all__ = [
    "AlgebraicWitness",
    "CanonicalForm",
    "ClassificationReport",
    "DeciderDisagreement",
    "DilationCertificate",
    "Witness",
    "classify_dilation",
    "classify_lorentz",
    "classify_operator",
    "classify_rotation",
    "classify_symbol",
    "invariant_space_dimension",
    "lie_invariant",
    "sampling_invariant",
    "witness_search",
]
