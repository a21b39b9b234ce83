"""Exact elements of O(n) and O(1,n), affine motions, and their action on symbols.

Matrices are tuples of rows of :class:`~fractions.Fraction`.  Rotations and
boosts come from rational points on the unit circle and hyperbola, so every
element satisfies its defining relation exactly.

Index conventions: a Minkowski element has size ``1+n`` with row/column 0 the
time direction; a Euclidean element has size ``n``.  Covariable indices are
``0`` for ``tau`` and ``1..n`` for ``xi_k`` in both cases.

The pull-back of a symbol is ``(Lambda^* p)(xi) = p(Lambda^T xi)``, which is
how a change of variables ``u -> u(Lambda x)`` acts on exponential probes.
With this convention ``pullback(pullback(p, A), B) == pullback(p, B @ A)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .polynomial import DimensionError, Polynomial
from .scalar import Scalar

Matrix = tuple[tuple[Fraction, ...], ...]
Tag = Literal["euclidean", "minkowski"]
TAGS = ("euclidean", "minkowski")


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, Scalar):
                if x.im:
                    raise ValueError("group elements must have real entries")
                x = x.re
            r.append(Fraction(x))
        out.append(tuple(r))
    return tuple(out)


def identity(size: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def metric(tag: Tag, size: int) -> Matrix:
    if tag == "euclidean":
        return identity(size)
    return tuple(
        tuple(Fraction(0 if i != j else (1 if i == 0 else -1)) for j in range(size)) for i in range(size)
    )


@dataclass(frozen=True)
class Violation:
    """First non-zero entry of ``M^T g M - g`` (or of ``M g M^T - g``)."""

    relation: str
    index: tuple[int, int]
    residual: Fraction


@dataclass(frozen=True)
class GroupElement:
    entries: Matrix
    tag: Tag
    label: str = field(default="", compare=False)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        """Spatial dimension of the space the element acts on."""
        return self.size - 1 if self.tag == "minkowski" else self.size

    def transpose(self) -> GroupElement:
        return GroupElement(transpose(self.entries), self.tag, f"({self.label})^T" if self.label else "")

    def __matmul__(self, other: GroupElement) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.tag != other.tag or self.size != other.size:
            raise DimensionError(
                f"cannot compose {self.tag}[{self.size}] with {other.tag}[{other.size}]"
            )
        label = f"{self.label} . {other.label}" if self.label and other.label else ""
        return GroupElement(matmul(self.entries, other.entries), self.tag, label)

    def apply(self, vector: Sequence) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(row, vector)), Fraction(0)) for row in self.entries]

    def to_json(self) -> dict:
        data = {
            "tag": self.tag,
            "entries": [[[x.numerator, x.denominator] for x in row] for row in self.entries],
        }
        if self.label:
            data["label"] = self.label
        return data

    @classmethod
    def from_json(cls, data) -> GroupElement:
        try:
            tag = data["tag"]
            rows = [[Fraction(*x) if isinstance(x, list) else Fraction(x) for x in row] for row in data["entries"]]
        except (TypeError, KeyError, ZeroDivisionError) as exc:
            raise ValueError("matrix JSON needs 'tag' and 'entries' of [num, den] pairs") from exc
        result = verify_membership(rows, tag)
        if isinstance(result, Violation):
            raise ValueError(
                f"matrix is not in the {tag} group: {result.relation} entry {result.index} "
                f"has residual {result.residual}"
            )
        return GroupElement(result.entries, tag, data.get("label", ""))


def verify_membership(m: Sequence[Sequence], tag: Tag) -> GroupElement | Violation:
    """Check ``M^T g M = M g M^T = g`` exactly.

    Returns the element on success, otherwise the first offending entry in
    row-major order of ``M^T g M - g`` (checked first) or ``M g M^T - g``.
    """
    if tag not in TAGS:
        raise ValueError(f"unknown metric tag {tag!r}")
    mat = as_matrix(m)
    size = len(mat)
    if size == 0 or any(len(row) != size for row in mat):
        raise ValueError("membership check needs a non-empty square matrix")
    g = metric(tag, size)
    mt = transpose(mat)
    checks = (
        ("M^T g M - g", matmul(matmul(mt, g), mat)),
        ("M g M^T - g", matmul(matmul(mat, g), mt)),
    )
    for relation, product in checks:
        for i in range(size):
            for j in range(size):
                r = product[i][j] - g[i][j]
                if r:
                    return Violation(relation, (i, j), r)
    return GroupElement(mat, tag)


def _checked(entries: Matrix, tag: Tag, label: str) -> GroupElement:
    result = verify_membership(entries, tag)
    if isinstance(result, Violation):  # pragma: no cover - constructions are exact
        raise AssertionError(f"{label} failed membership: {result}")
    return GroupElement(result.entries, tag, label)


def _size(n: int, tag: Tag) -> int:
    if n < 1:
        raise ValueError(f"spatial dimension must be >= 1, got {n}")
    if tag not in TAGS:
        raise ValueError(f"unknown metric tag {tag!r}")
    return n + 1 if tag == "minkowski" else n


def _slot(n: int, k: int, tag: Tag) -> int:
    """Matrix row of covariable index ``k`` (0 = tau, 1..n = xi_k)."""
    lo = 0 if tag == "minkowski" else 1
    if not lo <= k <= n:
        raise IndexError(f"covariable index {k} out of range {lo}..{n} for {tag} n={n}")
    return k if tag == "minkowski" else k - 1


def rational_rotation(n: int, i: int, j: int, t, tag: Tag = "euclidean") -> GroupElement:
    """Rotation in the ``(xi_i, xi_j)`` plane with ``c=(1-t^2)/(1+t^2)``, ``s=2t/(1+t^2)``.

    Rows ``i, j`` read ``[c, -s]`` and ``[s, c]``.
    """
    if not 1 <= i < j <= n:
        raise IndexError(f"rotation plane needs 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    t = Fraction(t)
    c = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    size = _size(n, tag)
    a, b = _slot(n, i, tag), _slot(n, j, tag)
    m = [list(row) for row in identity(size)]
    m[a][a], m[a][b], m[b][a], m[b][b] = c, -s, s, c
    return _checked(as_matrix(m), tag, f"rotation({i},{j};t={t})")


def rational_boost(n: int, i: int, t) -> GroupElement:
    """Boost in the ``(tau, xi_i)`` plane with ``c=(1+t^2)/(1-t^2)``, ``s=2t/(1-t^2)``."""
    if not 1 <= i <= n:
        raise IndexError(f"boost direction needs 1 <= i <= n, got i={i}, n={n}")
    t = Fraction(t)
    if abs(t) == 1:
        raise ValueError(f"boost parameter t={t} is light-like (1 - t^2 = 0)")
    c = (1 + t * t) / (1 - t * t)
    s = 2 * t / (1 - t * t)
    m = [list(row) for row in identity(n + 1)]
    m[0][0], m[0][i], m[i][0], m[i][i] = c, s, s, c
    return _checked(as_matrix(m), "minkowski", f"boost({i};t={t})")


def negation(n: int, indices: Sequence[int], tag: Tag = "minkowski") -> GroupElement:
    """Diagonal reflection flipping the listed covariables."""
    size = _size(n, tag)
    m = [list(row) for row in identity(size)]
    for k in indices:
        a = _slot(n, k, tag)
        m[a][a] = -m[a][a]
    names = ",".join("tau" if k == 0 else f"xi{k}" for k in indices)
    return _checked(as_matrix(m), tag, f"negate({names})")


def time_reflection(n: int) -> GroupElement:
    return negation(n, [0], "minkowski")


def minus_identity(n: int, tag: Tag = "minkowski") -> GroupElement:
    lo = 0 if tag == "minkowski" else 1
    el = negation(n, range(lo, n + 1), tag)
    return GroupElement(el.entries, tag, "-I")


def transposition(n: int, k: int, l: int, tag: Tag = "minkowski") -> GroupElement:
    """Permutation swapping spatial covariables ``xi_k`` and ``xi_l``."""
    if not 1 <= k <= n or not 1 <= l <= n or k == l:
        raise IndexError(f"swap needs distinct spatial indices in 1..{n}, got {k}, {l}")
    size = _size(n, tag)
    a, b = _slot(n, k, tag), _slot(n, l, tag)
    m = [list(row) for row in identity(size)]
    m[a][a] = m[b][b] = Fraction(0)
    m[a][b] = m[b][a] = Fraction(1)
    return _checked(as_matrix(m), tag, f"swap(xi{k},xi{l})")


def embed_spatial(r: GroupElement) -> GroupElement:
    """``1 (+) R``: a Euclidean element acting on the spatial block of O(1,n)."""
    if r.tag != "euclidean":
        raise ValueError("only Euclidean elements can be embedded")
    size = r.size + 1
    m = [[Fraction(0)] * size for _ in range(size)]
    m[0][0] = Fraction(1)
    for i, row in enumerate(r.entries):
        for j, x in enumerate(row):
            m[i + 1][j + 1] = x
    return _checked(as_matrix(m), "minkowski", f"1+{r.label}" if r.label else "")


def reflections_and_permutations(n: int, kind: str, *args, tag: Tag = "minkowski") -> GroupElement:
    """Dispatch for the discrete elements: ``negate k...``, ``swap k l``, ``embed R``."""
    if kind == "negate":
        return negation(n, args, tag)
    if kind == "swap":
        return transposition(n, *args, tag=tag)
    if kind == "embed":
        (r,) = args
        if r.n != n:
            raise DimensionError(f"cannot embed O({r.n}) element into O(1,{n})")
        return embed_spatial(r)
    raise ValueError(f"unknown discrete element {kind!r}")


@dataclass(frozen=True)
class AffineMotion:
    """``x -> scale * (linear @ x) - shift``; translations and dilations of space(-time)."""

    linear: GroupElement
    shift: tuple[Fraction, ...]
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError(f"dilation factor must be positive, got {self.scale}")
        if len(self.shift) != self.linear.size:
            raise DimensionError("shift length does not match the linear part")

    @classmethod
    def translation(cls, shift: Sequence, tag: Tag = "minkowski") -> AffineMotion:
        shift = tuple(Fraction(s) for s in shift)
        return cls(GroupElement(identity(len(shift)), tag, "I"), shift)

    @classmethod
    def dilation(cls, n: int, scale, tag: Tag = "minkowski") -> AffineMotion:
        size = _size(n, tag)
        return cls(GroupElement(identity(size), tag, "I"), (Fraction(0),) * size, Fraction(scale))

    def apply(self, point: Sequence) -> list[Fraction]:
        moved = self.linear.apply(point)
        return [self.scale * x - s for x, s in zip(moved, self.shift)]

    def to_json(self) -> dict:
        return {
            "linear": self.linear.to_json(),
            "shift": [[s.numerator, s.denominator] for s in self.shift],
            "scale": [self.scale.numerator, self.scale.denominator],
        }


def pullback_symbol(p: Polynomial, element: GroupElement) -> Polynomial:
    """``xi -> p(Lambda^T xi)``.

    A Euclidean element of size ``n`` acts on the spatial covariables only.
    """
    if element.tag == "minkowski" and element.size != p.n + 1:
        raise DimensionError(f"O(1,{element.size - 1}) element cannot act on a symbol with n={p.n}")
    if element.tag == "euclidean" and element.size != p.n:
        raise DimensionError(f"O({element.size}) element cannot act on a symbol with n={p.n}")
    return p.substitute_linear(transpose(element.entries))


@dataclass(frozen=True)
class Generator:
    """Infinitesimal generator acting on symbols.

    ``rotation(i, j)``: ``xi_i d/dxi_j - xi_j d/dxi_i``.
    ``boost(i)``: ``tau d/dxi_i + xi_i d/dtau``.
    """

    kind: Literal["rotation", "boost"]
    i: int
    j: int = 0

    def __str__(self):
        return f"L{self.i}{self.j}" if self.kind == "rotation" else f"K{self.i}"

    @property
    def name(self) -> str:
        if self.kind == "rotation":
            return f"rotation({self.i},{self.j})"
        return f"boost({self.i})"


def generators(n: int, tag: Tag) -> list[Generator]:
    gens = [Generator("rotation", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if tag == "minkowski":
        gens += [Generator("boost", i) for i in range(1, n + 1)]
    return gens


def lie_derivative(p: Polynomial, gen: Generator) -> Polynomial:
    if gen.kind == "rotation":
        if not 1 <= gen.i < gen.j <= p.n:
            raise IndexError(f"rotation generator {gen.name} invalid for n={p.n}")
        return p.derivative(gen.j).times_variable(gen.i) - p.derivative(gen.i).times_variable(gen.j)
    if gen.kind == "boost":
        if not 1 <= gen.i <= p.n:
            raise IndexError(f"boost generator {gen.name} invalid for n={p.n}")
        return p.derivative(gen.i).times_variable(0) + p.derivative(0).times_variable(gen.i)
    raise ValueError(f"unknown generator kind {gen.kind!r}")
