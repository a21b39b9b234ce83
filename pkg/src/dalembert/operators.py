"""Linear partial differential operators ``L = sum a_{j,alpha}(t,x) d_t^j d^alpha``.

Coefficients are polynomials in the base variables ``(t, x^1..x^n)``, stored as
:class:`~dalembert.polynomial.Polynomial` with slot 0 = ``t``.  Acting on the
probe ``exp(tau t + xi.x)`` the operator multiplies it by the full symbol
``p(x, xi) = sum a_{j,alpha}(x) tau^j xi^alpha``; everything downstream works
with that polynomial rather than with functions.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import product

from .polynomial import (
    BASE_NAMES,
    DimensionError,
    Exponents,
    Polynomial,
    format_coefficient,
    format_monomial,
    join_signed,
    monomial_order_key,
)
from .scalar import Number, Scalar

Key = tuple[int, tuple[int, ...]]


class OperatorError(ValueError):
    pass


def _key_exps(key: Key) -> Exponents:
    j, alpha = key
    return (j,) + tuple(alpha)


def _exps_key(exps: Sequence[int]) -> Key:
    return exps[0], tuple(exps[1:])


class OperatorSpec:
    """An operator of declared order ``m`` in ``1+n`` space-time dimensions.

    ``coeffs`` maps ``(j, alpha)`` to a coefficient polynomial in ``(t, x)``;
    zero coefficients are dropped.  Construction rejects keys above order ``m``
    and operators whose order-``m`` coefficients all vanish.
    """

    __slots__ = ("n", "m", "_coeffs")

    def __init__(self, n: int, m: int, coeffs: Mapping[Key, Polynomial | Number]):
        if n < 1:
            raise OperatorError(f"spatial dimension must be >= 1, got {n}")
        if m < 0:
            raise OperatorError(f"order must be >= 0, got {m}")
        clean: dict[Key, Polynomial] = {}
        for (j, alpha), a in coeffs.items():
            alpha = tuple(int(x) for x in alpha)
            if len(alpha) != n or j < 0 or min(alpha, default=0) < 0:
                raise OperatorError(f"bad multi-index ({j}, {alpha}) for n={n}")
            if not isinstance(a, Polynomial):
                a = Polynomial.constant(n, a)
            elif a.n != n:
                raise DimensionError(f"coefficient for ({j}, {alpha}) has n={a.n}, operator has n={n}")
            if j + sum(alpha) > m:
                raise OperatorError(f"term ({j}, {alpha}) has order {j + sum(alpha)} > declared m={m}")
            if a:
                key = (j, alpha)
                clean[key] = clean[key] + a if key in clean else a
                if not clean[key]:
                    del clean[key]
        if not any(j + sum(alpha) == m for (j, alpha) in clean):
            raise OperatorError(
                f"declared order m={m} but every coefficient of order {m} vanishes"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorSpec is immutable")

    def keys(self) -> list[Key]:
        return sorted(self._coeffs, key=lambda k: monomial_order_key(_key_exps(k)), reverse=True)

    def items(self) -> list[tuple[Key, Polynomial]]:
        return [(k, self._coeffs[k]) for k in self.keys()]

    def coefficient(self, j: int, alpha: Sequence[int]) -> Polynomial:
        return self._coeffs.get((j, tuple(alpha)), Polynomial.zero(self.n))

    def has_time_derivative(self) -> bool:
        return any(j for j, _ in self._coeffs)

    def is_constant_coefficient(self) -> bool:
        return all(a.is_constant() for a in self._coeffs.values())

    def __eq__(self, other):
        if isinstance(other, OperatorSpec):
            return (self.n, self.m, self._coeffs) == (other.n, other.m, other._coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"OperatorSpec(n={self.n}, m={self.m}, {format_operator(self)!r})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "coeffs": [
                {"j": j, "alpha": list(alpha), "coeff_poly": a.to_json()} for (j, alpha), a in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data) -> OperatorSpec:
        try:
            n, m = int(data["n"]), int(data["m"])
            entries = data["coeffs"]
        except (TypeError, KeyError) as exc:
            raise OperatorError("operator JSON needs 'n', 'm' and 'coeffs'") from exc
        coeffs: dict[Key, Polynomial] = {}
        for entry in entries:
            key = (int(entry["j"]), tuple(int(a) for a in entry["alpha"]))
            if key in coeffs:
                raise OperatorError(f"duplicate coefficient key {key}")
            coeffs[key] = Polynomial.from_json(entry["coeff_poly"])
        return cls(n, m, coeffs)


@dataclass(frozen=True)
class FullSymbol:
    """``p(x, xi)`` as a map ``(base exponents, covariable exponents) -> Scalar``."""

    n: int
    terms: Mapping[tuple[Exponents, Exponents], Scalar]

    def at(self, point: Sequence[Number]) -> Polynomial:
        """Specialise the base variables to ``point``; yields a symbol in ``xi``."""
        if len(point) != self.n + 1:
            raise DimensionError(f"base point needs {self.n + 1} entries")
        values = [Scalar.coerce(v) for v in point]
        out: dict[Exponents, Scalar] = {}
        for (xe, ce), c in self.terms.items():
            v = c
            for x, k in zip(values, xe):
                if k:
                    v = v * x**k
            out[ce] = out.get(ce, Scalar(0)) + v
        return Polynomial(self.n, out)

    def at_origin(self) -> Polynomial:
        return self.at([0] * (self.n + 1))


def full_symbol(op: OperatorSpec) -> FullSymbol:
    terms: dict[tuple[Exponents, Exponents], Scalar] = {}
    for key, a in op.items():
        ce = _key_exps(key)
        for xe, c in a.terms():
            terms[(xe, ce)] = c
    return FullSymbol(op.n, terms)


@dataclass(frozen=True)
class TranslationWitness:
    """A coefficient that changes under a shift: ``a_key(point) != a_key(0)``."""

    key: Key
    point: tuple[Scalar, ...]
    at_point: Scalar
    at_origin: Scalar

    def verify(self, op: OperatorSpec) -> bool:
        a = op.coefficient(*self.key)
        return (
            a.evaluate(self.point) == self.at_point
            and a.evaluate([0] * len(self.point)) == self.at_origin
            and self.at_point != self.at_origin
        )

    def to_json(self) -> dict:
        j, alpha = self.key
        return {
            "j": j,
            "alpha": list(alpha),
            "point": [s.to_json() for s in self.point],
            "at_point": self.at_point.to_json(),
            "at_origin": self.at_origin.to_json(),
        }


def small_points(width: int) -> Iterable[tuple[int, ...]]:
    """Unit vectors first, then integer points of growing height in a fixed order."""
    seen = set()
    for k in range(width):
        e = tuple(int(i == k) for i in range(width))
        seen.add(e)
        yield e
    height = 1
    while True:
        values = [0]
        for h in range(1, height + 1):
            values += [h, -h]
        for pt in product(values, repeat=width):
            if max(map(abs, pt)) == height and pt not in seen:
                seen.add(pt)
                yield pt
        height += 1


def find_nonzero_point(p: Polynomial, width: int) -> tuple[int, ...]:
    """First point from :func:`small_points` where ``p`` does not vanish.

    A non-zero polynomial of degree ``d`` cannot vanish on a grid with more
    than ``d`` values per axis, so the scan stops by height ``d // 2 + 1``.
    """
    if p.is_zero():
        raise ValueError("zero polynomial vanishes everywhere")
    limit = p.degree() // 2 + 1
    for pt in small_points(width):
        if max(map(abs, pt)) > limit:
            break
        if p.evaluate(pt):
            return pt
    raise AssertionError("non-zero polynomial vanished on a full grid")  # pragma: no cover


def translation_witness(op: OperatorSpec) -> TranslationWitness | None:
    """``None`` when every coefficient is constant, else a shift that changes one."""
    width = op.n + 1
    for key, a in op.items():
        if a.is_constant():
            continue
        diff = a - Polynomial.constant(op.n, a.constant_term())
        pt = find_nonzero_point(diff, width)
        point = tuple(Scalar(x) for x in pt)
        return TranslationWitness(key, point, a.evaluate(point), a.constant_term())
    return None


def is_translation_invariant(op: OperatorSpec) -> bool:
    return translation_witness(op) is None


def constant_symbol(op: OperatorSpec) -> Polynomial:
    """``p(xi) = p(0, xi)`` for a constant-coefficient operator."""
    if not op.is_constant_coefficient():
        raise OperatorError("constant_symbol needs constant coefficients; check translation invariance first")
    return Polynomial(op.n, {_key_exps(k): a.constant_term() for k, a in op.items()})


def operator_of(p: Polynomial) -> OperatorSpec:
    """Constant-coefficient operator whose symbol is ``p``; order is ``deg p``."""
    if p.is_zero():
        raise OperatorError("the zero symbol is not an operator of any order")
    coeffs = {_exps_key(e): Polynomial.constant(p.n, c) for e, c in p.terms()}
    return OperatorSpec(p.n, p.degree(), coeffs)


def compose(a: OperatorSpec, b: OperatorSpec) -> OperatorSpec:
    if a.n != b.n:
        raise DimensionError(f"cannot compose operators with n={a.n} and n={b.n}")
    if not (a.is_constant_coefficient() and b.is_constant_coefficient()):
        raise OperatorError("composition is only defined here for constant coefficients")
    return operator_of(constant_symbol(a) * constant_symbol(b))


def d_alembertian(n: int) -> OperatorSpec:
    return operator_of(minkowski_form(n))


def laplacian(n: int) -> OperatorSpec:
    return operator_of(euclidean_form(n))


def minkowski_form(n: int) -> Polynomial:
    """``q = tau^2 - |xi|^2``."""
    terms = {tuple(2 * int(i == k) for i in range(n + 1)): (1 if k == 0 else -1) for k in range(n + 1)}
    return Polynomial(n, terms)


def euclidean_form(n: int) -> Polynomial:
    """``|xi|^2``."""
    terms = {tuple(2 * int(i == k) for i in range(n + 1)): 1 for k in range(1, n + 1)}
    return Polynomial(n, terms)


DERIVATIVE_NAMES = ("dt", "dx")


def format_operator(op: OperatorSpec) -> str:
    """DSL text: each term is ``coeff*base-monomial*derivatives``."""
    pieces = []
    for key, a in op.items():
        deriv = format_monomial(_key_exps(key), DERIVATIVE_NAMES)
        for xe, c in a.terms():
            base = format_monomial(xe, BASE_NAMES)
            sign, mag = format_coefficient(c, standalone=not (base or deriv))
            pieces.append((sign, "*".join(x for x in (mag, base, deriv) if x)))
    return join_signed(pieces)
