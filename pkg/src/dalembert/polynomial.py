"""Sparse multivariate polynomials over the Gaussian rationals.

A :class:`Polynomial` lives in ``1 + n`` variables.  Slot 0 is the time-like
variable (``tau`` for symbols, ``t`` for coefficient polynomials) and slots
``1..n`` are the spatial ones (``xi_k`` or ``x^k``).  A *spatial* polynomial is
simply one whose slot-0 exponent is always zero.

Terms are stored as ``{exponent tuple: Scalar}`` with no zero coefficients, so
two polynomials are equal exactly when their term maps are equal.  Iteration is
in graded-lex order, highest degree first.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator

from .scalar import Number, Scalar

Exponents = tuple[int, ...]


class DimensionError(ValueError):
    """Operands live in different variable spaces."""


def monomial_order_key(exps: Exponents):
    """Sort key for graded-lex order; sort with ``reverse=True`` for highest first."""
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponents, Number] | None = None):
        if n < 0:
            raise ValueError(f"spatial dimension must be non-negative, got {n}")
        clean: dict[Exponents, Scalar] = {}
        if terms:
            width = n + 1
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != width or any(e < 0 for e in exps):
                    raise DimensionError(
                        f"exponent vector {exps} does not fit n={n} (need {width} non-negative entries)"
                    )
                c = Scalar.coerce(coeff)
                if c:
                    clean[exps] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponents, Scalar]) -> Polynomial:
        # trusted constructor: terms already canonical
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, value: Number) -> Polynomial:
        return cls(n, {(0,) * (n + 1): value})

    @classmethod
    def variable(cls, n: int, index: int) -> Polynomial:
        return cls.monomial(n, _unit(n, index))

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff: Number = 1) -> Polynomial:
        return cls(n, {tuple(exps): coeff})

    # basic access

    @property
    def nvars(self) -> int:
        return self.n + 1

    def terms(self) -> list[tuple[Exponents, Scalar]]:
        """Terms in graded-lex order, highest degree first."""
        return sorted(self._terms.items(), key=lambda kv: monomial_order_key(kv[0]), reverse=True)

    def as_dict(self) -> dict[Exponents, Scalar]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponents, Scalar]]:
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exps), Scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=-1)

    def mentions(self, index: int) -> bool:
        return any(e[index] for e in self._terms)

    def is_spatial(self) -> bool:
        return not self.mentions(0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * self.nvars, Scalar(0))

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, frozenset(self._terms.items()))))
        return self._hash

    # ring operations

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise DimensionError(
                f"dimension mismatch: left operand has n={self.n}, right operand has n={other.n}"
            )

    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return Polynomial.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Exponents, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw(self.n, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: Number) -> Polynomial:
        factor = Scalar.coerce(factor)
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {e: c * factor for e, c in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # calculus and structure

    def derivative(self, index: int) -> Polynomial:
        if not 0 <= index <= self.n:
            raise DimensionError(f"variable index {index} out of range 0..{self.n}")
        out = {}
        for e, c in self._terms.items():
            k = e[index]
            if k:
                d = list(e)
                d[index] = k - 1
                out[tuple(d)] = c * k
        return Polynomial._raw(self.n, out)

    def times_variable(self, index: int) -> Polynomial:
        return self.times_variable_power(index, 1)

    def times_variable_power(self, index: int, k: int) -> Polynomial:
        if not k:
            return self
        out = {}
        for e, c in self._terms.items():
            d = list(e)
            d[index] += k
            out[tuple(d)] = c
        return Polynomial._raw(self.n, out)

    def homogeneous_parts(self) -> list[tuple[int, Polynomial]]:
        """Non-zero homogeneous components keyed by total degree, ascending."""
        groups: dict[int, dict[Exponents, Scalar]] = {}
        for e, c in self._terms.items():
            groups.setdefault(sum(e), {})[e] = c
        return [(d, Polynomial._raw(self.n, groups[d])) for d in sorted(groups)]

    def collect(self, index: int) -> dict[int, Polynomial]:
        """Split as ``sum_k part_k * var_index**k``; parts no longer mention ``var_index``."""
        groups: dict[int, dict[Exponents, Scalar]] = {}
        for e, c in self._terms.items():
            k = e[index]
            d = list(e)
            d[index] = 0
            groups.setdefault(k, {})[tuple(d)] = c
        return {k: Polynomial._raw(self.n, groups[k]) for k in sorted(groups)}

    def evaluate(self, point: Sequence[Number]) -> Scalar:
        """Exact value at ``point`` (length ``1+n``, or ``n`` for a spatial polynomial)."""
        values = [Scalar.coerce(v) for v in point]
        if len(values) == self.n:
            if self.mentions(0):
                raise DimensionError("spatial point given for a polynomial that mentions slot 0")
            values = [Scalar(0)] + values
        elif len(values) != self.nvars:
            raise DimensionError(
                f"point has {len(values)} entries; expected {self.nvars} (or {self.n} for spatial)"
            )
        total = Scalar(0)
        powers: dict[tuple[int, int], Scalar] = {}
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    pw = powers.get(key)
                    if pw is None:
                        pw = powers[key] = values[i] ** k
                    term = term * pw
            total = total + term
        return total

    def substitute_linear(self, matrix: Sequence[Sequence[Number]]) -> Polynomial:
        """Return ``x -> p(M x)``: variable ``i`` becomes ``sum_k M[i][k] x_k``.

        ``M`` is ``(1+n) x (1+n)``, or ``n x n`` acting on the spatial slots only.
        Entries must be rational.
        """
        size = len(matrix)
        if size == self.nvars:
            offset = 0
        elif size == self.n:
            offset = 1
        else:
            raise DimensionError(
                f"matrix of size {size} does not act on {self.nvars} variables (n={self.n})"
            )
        if any(len(row) != size for row in matrix):
            raise DimensionError("substitution matrix must be square")
        width = self.nvars
        forms: dict[int, dict[Exponents, Fraction]] = {}
        for r, row in enumerate(matrix):
            var = r + offset
            form = {}
            for k, entry in enumerate(row):
                value = _rational(entry)
                if value:
                    form[_unit_tuple(width, k + offset)] = value
            if form != {_unit_tuple(width, var): 1}:
                forms[var] = form
        if not forms:
            return self
        moved = sorted(forms)
        power_cache: dict[tuple[int, int], dict[Exponents, Fraction]] = {}
        product_cache: dict[tuple[int, ...], dict[Exponents, Fraction]] = {}

        def power(var: int, k: int) -> dict[Exponents, Fraction]:
            key = (var, k)
            if key not in power_cache:
                if k == 0:
                    power_cache[key] = {(0,) * width: Fraction(1)}
                else:
                    power_cache[key] = _rmul(power(var, k - 1), forms[var])
            return power_cache[key]

        def product(ks: tuple[int, ...]) -> dict[Exponents, Fraction]:
            if ks not in product_cache:
                acc = {(0,) * width: Fraction(1)}
                for var, k in zip(moved, ks):
                    if k:
                        acc = _rmul(acc, power(var, k))
                product_cache[ks] = acc
            return product_cache[ks]

        re_acc: dict[Exponents, Fraction] = {}
        im_acc: dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            ks = tuple(e[v] for v in moved)
            fixed = list(e)
            for v in moved:
                fixed[v] = 0
            expansion = product(ks)
            cre, cim = c.re, c.im
            for f, w in expansion.items():
                g = tuple(a + b for a, b in zip(fixed, f))
                if cre:
                    re_acc[g] = re_acc.get(g, 0) + cre * w
                if cim:
                    im_acc[g] = im_acc.get(g, 0) + cim * w
        out = {}
        for g in re_acc.keys() | im_acc.keys():
            s = Scalar(re_acc.get(g, 0), im_acc.get(g, 0))
            if s:
                out[g] = s
        return Polynomial._raw(self.n, out)

    # serialisation

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"coeff": c.to_json(), "exps": list(e)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data) -> Polynomial:
        try:
            n = int(data["n"])
            raw = data["terms"]
        except (TypeError, KeyError) as exc:
            raise ValueError("polynomial JSON needs 'n' and 'terms'") from exc
        terms: dict[Exponents, Scalar] = {}
        for item in raw:
            exps = tuple(int(e) for e in item["exps"])
            coeff = Scalar.from_json(item["coeff"])
            if not coeff:
                raise ValueError(f"zero coefficient stored for exponents {list(exps)}")
            if exps in terms:
                raise ValueError(f"duplicate exponents {list(exps)}")
            terms[exps] = coeff
        return cls(n, terms)

    def __repr__(self):
        return f"Polynomial(n={self.n}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def _unit(n: int, index: int) -> list[int]:
    if not 0 <= index <= n:
        raise DimensionError(f"variable index {index} out of range 0..{n}")
    e = [0] * (n + 1)
    e[index] = 1
    return e


def _unit_tuple(width: int, index: int) -> Exponents:
    e = [0] * width
    e[index] = 1
    return tuple(e)


def _rational(value) -> Fraction:
    if isinstance(value, Scalar):
        if value.im:
            raise ValueError("substitution matrices must be real")
        return value.re
    return Fraction(value)


def _rmul(a: dict[Exponents, Fraction], b: dict[Exponents, Fraction]) -> dict[Exponents, Fraction]:
    out: dict[Exponents, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


# functional entry points


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: n={a.n} vs n={b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}; expected add, sub or mul")


def substitute_linear(p: Polynomial, matrix: Sequence[Sequence[Number]]) -> Polynomial:
    return p.substitute_linear(matrix)


def decompose_homogeneous(p: Polynomial) -> list[tuple[int, Polynomial]]:
    return p.homogeneous_parts()


def partial_derivative(p: Polynomial, var: int) -> Polynomial:
    return p.derivative(var)


def eval_at(p: Polynomial, point: Sequence[Number]) -> Scalar:
    return p.evaluate(point)


def monomials_of_degree(nvars: int, degree: int, first: int = 0) -> list[Exponents]:
    """All exponent tuples of length ``nvars`` and total ``degree`` using slots ``first..``."""
    slots = range(first, nvars)
    out = []
    for combo in combinations_with_replacement(slots, degree):
        e = [0] * nvars
        for s in combo:
            e[s] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


# text form

SYMBOL_NAMES = ("tau", "xi")
BASE_NAMES = ("t", "x")


def variable_name(index: int, names: tuple[str, str] = SYMBOL_NAMES) -> str:
    return names[0] if index == 0 else f"{names[1]}{index}"


def format_monomial(exps: Sequence[int], names: tuple[str, str] = SYMBOL_NAMES) -> str:
    parts = []
    for i, k in enumerate(exps):
        if k:
            v = variable_name(i, names)
            parts.append(v if k == 1 else f"{v}^{k}")
    return "*".join(parts)


def format_coefficient(c: Scalar, standalone: bool) -> tuple[str, str]:
    """Split ``c`` into a sign and a magnitude string suitable for a product.

    With ``standalone=False`` a unit magnitude becomes the empty string.
    """
    if c.is_real():
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        text = "" if (mag == 1 and not standalone) else str(mag)
        return sign, text
    if not c.re:
        sign = "-" if c.im < 0 else "+"
        mag = abs(c.im)
        return sign, ("i" if mag == 1 else f"{mag}*i")
    sign_im = "-" if c.im < 0 else "+"
    mag_im = abs(c.im)
    im_text = "i" if mag_im == 1 else f"{mag_im}*i"
    return "+", f"({c.re} {sign_im} {im_text})"


def join_signed(pieces: list[tuple[str, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for k, (sign, body) in enumerate(pieces):
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_polynomial(p: Polynomial, names: tuple[str, str] = SYMBOL_NAMES) -> str:
    pieces = []
    for e, c in p.terms():
        mono = format_monomial(e, names)
        sign, mag = format_coefficient(c, standalone=not mono)
        body = "*".join(x for x in (mag, mono) if x)
        pieces.append((sign, body))
    return join_signed(pieces)


SymbolPolynomial = Polynomial
