"""Operator-level classification: translation first, then the linear group, then dilations."""

from __future__ import annotations

from dataclasses import dataclass

from ..groups import Tag
from ..operators import (
    OperatorError,
    OperatorSpec,
    TranslationWitness,
    constant_symbol,
    format_operator,
    translation_witness,
)
from .canonical import CanonicalForm, classify_symbol
from .dilation import DilationCertificate, classify_dilation
from .witness import DEFAULT_BUDGET, AlgebraicWitness, Witness

GROUP_KEYS = {"minkowski": ("lorentz", "poincare"), "euclidean": ("rotation", "euclidean_motion")}


@dataclass(frozen=True)
class ClassificationReport:
    space: Tag
    operator: OperatorSpec
    translation: TranslationWitness | None
    linear: CanonicalForm | Witness | AlgebraicWitness | None
    dilation: DilationCertificate | None
    dilation_checked: bool

    @property
    def translation_invariant(self) -> bool:
        return self.translation is None

    @property
    def linear_invariant(self) -> bool | None:
        if self.linear is None:
            return None
        return isinstance(self.linear, CanonicalForm)

    @property
    def full_invariant(self) -> bool:
        """Poincare (or Euclidean motion) invariance: translations and the linear group."""
        return self.translation_invariant and bool(self.linear_invariant)

    @property
    def dilation_invariant(self) -> bool | None:
        if not self.dilation_checked:
            return None
        return self.dilation is None

    @property
    def canonical(self) -> CanonicalForm | None:
        return self.linear if isinstance(self.linear, CanonicalForm) else None

    def homogeneous_degree(self) -> int | None:
        """Degree of the symbol if it is homogeneous (informational only)."""
        if not self.translation_invariant:
            return None
        p = constant_symbol(self.operator)
        return p.degree() if p.is_homogeneous() else None

    def to_json(self) -> dict:
        group_key, full_key = GROUP_KEYS[self.space]
        if self.linear is None:
            linear = None
        elif isinstance(self.linear, CanonicalForm):
            linear = {"invariant": True, "b": [b.to_json() for b in self.linear.coeffs], "form": str(self.linear)}
        else:
            linear = {"invariant": False, "witness": self.linear.to_json()}
        if not self.dilation_checked:
            dilation = None
        elif self.dilation is None:
            dilation = {"invariant": True}
        else:
            dilation = {"invariant": False, "certificate": self.dilation.to_json()}
        return {
            "space": self.space,
            "n": self.operator.n,
            "m": self.operator.m,
            "input": format_operator(self.operator),
            "translation": _yes(self.translation_invariant),
            "translation_witness": None if self.translation is None else self.translation.to_json(),
            group_key: linear,
            "dilation": dilation,
            full_key: _yes(self.full_invariant),
            "homogeneous_degree": self.homogeneous_degree(),
        }

    def to_text(self) -> str:
        group_key, full_key = GROUP_KEYS[self.space]
        lines = [
            _row("operator", format_operator(self.operator)),
            _row("space", f"{self.space}, n={self.operator.n}, m={self.operator.m}"),
            _row("translation", _yes(self.translation_invariant)),
        ]
        if self.translation is not None:
            t = self.translation
            pt = ", ".join(str(c) for c in t.point)
            lines.append(f"  coefficient of {t.key} is {t.at_point} at ({pt}) but {t.at_origin} at the origin")
        if self.linear is None:
            lines.append(_row(group_key, "skipped"))
        elif isinstance(self.linear, CanonicalForm):
            lines.append(_row(group_key, f"yes: {self.linear}"))
        else:
            lines.append(_row(group_key, f"no: {self.linear.describe()}"))
        if not self.dilation_checked:
            lines.append(_row("dilation", "skipped"))
        elif self.dilation is None:
            lines.append(_row("dilation", "yes"))
        else:
            j1, j2 = self.dilation.pair
            lines.append(_row("dilation", f"no: scale 2 moves a kernel probe (terms {j1} and {j2} both present)"))
        lines.append(_row(full_key, _yes(self.full_invariant)))
        return "\n".join(lines)


def _row(label: str, value: str) -> str:
    return f"{label:<18}{value}"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def classify_operator(
    op: OperatorSpec, space: Tag = "minkowski", budget: int = DEFAULT_BUDGET, crosscheck: bool = True
) -> ClassificationReport:
    if space not in GROUP_KEYS:
        raise OperatorError(f"unknown space {space!r}; expected minkowski or euclidean")
    if space == "euclidean":
        if op.has_time_derivative():
            raise OperatorError("euclidean classification needs a spatial operator; this one uses dt")
        if any(a.mentions(0) for _, a in op.items()):
            raise OperatorError("euclidean classification needs a spatial operator; a coefficient mentions t")
    shift = translation_witness(op)
    if shift is not None:
        return ClassificationReport(space, op, shift, None, None, False)
    linear = classify_symbol(constant_symbol(op), space, budget, crosscheck)
    if not isinstance(linear, CanonicalForm):
        return ClassificationReport(space, op, None, linear, None, False)
    return ClassificationReport(space, op, None, linear, classify_dilation(linear), True)
