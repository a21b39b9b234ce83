"""Exact Gaussian rationals.

A :class:`Scalar` is ``re + im*i`` with both parts held as
:class:`fractions.Fraction`, so every value is reduced with a positive
denominator and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union["Scalar", int, Fraction]

_ZERO = Fraction(0)


class Scalar:
    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        if not isinstance(re, Fraction):
            re = Fraction(re)
        if not isinstance(im, Fraction):
            im = Fraction(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def coerce(cls, value: Number) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Read ``"3/2"``, ``"-i"``, ``"1/2 + 3*i"`` and similar short forms."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar literal")
        if "." in s:
            raise ValueError(f"decimal literal {text!r}; write fractions like 1/2")
        # split at the last sign that is not the leading one
        cut = max(s.rfind("+", 1), s.rfind("-", 1))
        parts = [s[:cut], s[cut:]] if cut > 0 else [s]
        re, im = _ZERO, _ZERO
        for part in parts:
            if part.endswith("i"):
                body = part[:-1].rstrip("*")
                if body in ("", "+"):
                    im += 1
                elif body == "-":
                    im -= 1
                else:
                    im += Fraction(body)
            else:
                re += Fraction(part)
        return cls(re, im)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return Scalar(a * c)
            return Scalar(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.coerce(other) if not isinstance(other, Scalar) else other
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Scalar(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Scalar:
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("zero scalar has no inverse")
        return Scalar(self.re / norm, -self.im / norm)

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    # predicates

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # presentation

    def to_json(self) -> dict:
        return {
            "re": [self.re.numerator, self.re.denominator],
            "im": [self.im.numerator, self.im.denominator],
        }

    @classmethod
    def from_json(cls, data) -> Scalar:
        if isinstance(data, (int, str)):
            return cls.coerce(data)
        try:
            re = Fraction(*data["re"]) if "re" in data else _ZERO
            im = Fraction(*data["im"]) if "im" in data else _ZERO
        except (TypeError, KeyError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed scalar {data!r}") from exc
        return cls(re, im)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = _imag_text(self.im)
        if not self.re:
            return im
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {_imag_text(abs(self.im))}"


def _imag_text(value: Fraction) -> str:
    if value == 1:
        return "i"
    if value == -1:
        return "-i"
    return f"{value}*i"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
