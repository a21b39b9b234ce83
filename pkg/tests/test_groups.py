import random
from fractions import Fraction

import pytest

from dalembert.groups import (
    AffineMotion,
    Generator,
    GroupElement,
    Violation,
    embed_spatial,
    generators,
    lie_derivative,
    metric,
    minus_identity,
    negation,
    pullback_symbol,
    rational_boost,
    rational_rotation,
    reflections_and_permutations,
    time_reflection,
    transposition,
    verify_membership,
)
from dalembert.operators import euclidean_form, minkowski_form
from dalembert.polynomial import DimensionError, Polynomial

from helpers import random_polynomial

F = Fraction


def test_metric_is_lorentz():
    for size in (2, 3, 5):
        assert isinstance(verify_membership(metric("minkowski", size), "minkowski"), GroupElement)


def test_boost_matrix_is_lorentz():
    # (5/3)^2 - (4/3)^2 = 25/9 - 16/9 = 1
    m = [[F(5, 3), F(4, 3)], [F(4, 3), F(5, 3)]]
    assert isinstance(verify_membership(m, "minkowski"), GroupElement)


def test_shear_violation_location():
    # M^T g M = [[1, 1], [1, 0]] by hand, so M^T g M - g = [[0, 1], [1, 1]];
    # the first non-zero entry in row-major order is (0, 1) with residual 1
    v = verify_membership([[1, 1], [0, 1]], "minkowski")
    assert v == Violation("M^T g M - g", (0, 1), F(1))


def test_euclidean_violation():
    # M^T M - I = diag(3, 0)
    assert verify_membership([[2, 0], [0, 1]], "euclidean") == Violation("M^T g M - g", (0, 0), F(3))


def test_non_square_rejected():
    with pytest.raises(ValueError):
        verify_membership([[1, 0]], "euclidean")


def test_rotation_values():
    assert rational_rotation(2, 1, 2, 0).entries == ((1, 0), (0, 1))
    assert rational_rotation(2, 1, 2, 1).entries == ((0, -1), (1, 0))
    # (1 - 1/4)/(1 + 1/4) = 3/5 and 1/(5/4) = 4/5
    assert rational_rotation(2, 1, 2, F(1, 2)).entries == ((F(3, 5), F(-4, 5)), (F(4, 5), F(3, 5)))


def test_rotation_in_minkowski_leaves_time_alone():
    r = rational_rotation(3, 2, 3, F(1, 3), "minkowski")
    assert r.size == 4 and r.entries[0] == (1, 0, 0, 0)


def test_boost_values():
    assert rational_boost(1, 1, 0).entries == ((1, 0), (0, 1))
    assert rational_boost(1, 1, F(1, 2)).entries == ((F(5, 3), F(4, 3)), (F(4, 3), F(5, 3)))
    with pytest.raises(ValueError, match="light-like"):
        rational_boost(1, 1, 1)
    with pytest.raises(ValueError):
        rational_boost(2, 1, -1)


def test_index_errors():
    with pytest.raises(IndexError):
        rational_rotation(2, 2, 1, F(1, 2))
    with pytest.raises(IndexError):
        rational_boost(2, 3, F(1, 2))
    with pytest.raises(IndexError):
        negation(2, [3])
    with pytest.raises(IndexError):
        transposition(2, 1, 1)


def test_discrete_elements():
    assert minus_identity(2).entries == ((-1, 0, 0), (0, -1, 0), (0, 0, -1))
    assert time_reflection(2).entries == ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
    swap = reflections_and_permutations(2, "embed", transposition(2, 1, 2, "euclidean"))
    assert swap.entries == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert reflections_and_permutations(2, "swap", 1, 2) == swap
    assert reflections_and_permutations(2, "negate", 0) == time_reflection(2)
    with pytest.raises(ValueError):
        reflections_and_permutations(2, "shear")


def test_pullback_examples():
    q1 = minkowski_form(1)
    b = rational_boost(1, 1, F(1, 2))
    assert pullback_symbol(q1, b) == q1
    tau = Polynomial.variable(1, 0)
    assert pullback_symbol(tau, time_reflection(1)) == -tau
    p = Polynomial(1, {(2, 0): 1, (0, 2): 1})
    assert pullback_symbol(p, b) == Polynomial(1, {(2, 0): F(41, 9), (1, 1): F(80, 9), (0, 2): F(41, 9)})


def test_pullback_uses_the_transpose():
    # rotation rows read [c, -s], [s, c]; the pull-back substitutes the transpose,
    # so xi1 -> c*xi1 + s*xi2
    r = rational_rotation(2, 1, 2, F(1, 2))
    xi1 = Polynomial.variable(2, 1)
    assert pullback_symbol(xi1, r) == Polynomial(2, {(0, 1, 0): F(3, 5), (0, 0, 1): F(4, 5)})


def test_pullback_size_mismatch():
    with pytest.raises(DimensionError):
        pullback_symbol(minkowski_form(2), rational_boost(1, 1, F(1, 2)))


def _random_element(rng, n):
    t = F(rng.randint(1, 5), rng.randint(6, 9)) * rng.choice((1, -1))
    kind = rng.choice(["boost", "rotation", "negate"]) if n > 1 else rng.choice(["boost", "negate"])
    if kind == "boost":
        return rational_boost(n, rng.randint(1, n), t)
    if kind == "rotation":
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        return rational_rotation(n, i, j, t, "minkowski")
    return negation(n, [rng.randint(0, n)])


def test_pullback_composition_order():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 3)
        p = random_polynomial(rng, n, 3)
        a, b = _random_element(rng, n), _random_element(rng, n)
        assert pullback_symbol(pullback_symbol(p, a), b) == pullback_symbol(p, b @ a)


def test_products_stay_in_the_group():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randint(1, 3)
        g = _random_element(rng, n)
        for _ in range(4):
            g = g @ _random_element(rng, n)
        assert isinstance(verify_membership(g.entries, "minkowski"), GroupElement)
        assert isinstance(verify_membership(g.transpose().entries, "minkowski"), GroupElement)


def test_group_element_json_round_trip():
    g = rational_boost(2, 2, F(2, 3)) @ rational_rotation(2, 1, 2, F(1, 4), "minkowski")
    assert GroupElement.from_json(g.to_json()) == g
    with pytest.raises(ValueError, match="not in the minkowski group"):
        GroupElement.from_json({"tag": "minkowski", "entries": [[[1, 1], [1, 1]], [[0, 1], [1, 1]]]})


def test_affine_motions():
    shift = AffineMotion.translation([1, 2])
    assert shift.apply([3, 3]) == [2, 1]
    dil = AffineMotion.dilation(1, 2)
    assert dil.apply([1, F(1, 2)]) == [2, 1]
    with pytest.raises(ValueError):
        AffineMotion.dilation(1, 0)


def test_lie_derivative_examples():
    assert lie_derivative(euclidean_form(2), Generator("rotation", 1, 2)).is_zero()
    assert lie_derivative(minkowski_form(3), Generator("boost", 1)).is_zero()
    tau2 = Polynomial.monomial(1, (2, 0))
    assert lie_derivative(tau2, Generator("boost", 1)) == Polynomial.monomial(1, (1, 1), 2)


def test_minkowski_form_is_annihilated_by_every_generator():
    for n in range(1, 7):
        q = minkowski_form(n)
        assert all(lie_derivative(q, g).is_zero() for g in generators(n, "minkowski"))


def _first_order_coefficient(p, family, d):
    """Coefficient of t in ``(1 +- t^2)^d (pullback_t(p) - p)``, by exact interpolation.

    That product is a polynomial in ``t`` of degree <= 2d in each coefficient;
    the prefactor is ``1 + O(t^2)`` so its t-coefficient is the derivative at 0.
    """
    sign, make = family
    points = [F(k, 2 * d + 5) for k in range(1, 2 * d + 3)]
    values = []
    for t in points:
        factor = (1 + sign * t * t) ** d
        values.append((pullback_symbol(p, make(t)) - p).scale(factor))
    # Lagrange: coefficient of t^1 in prod_{m != k} (t - t_m) / (t_k - t_m)
    total = Polynomial.zero(p.n)
    for k, (tk, yk) in enumerate(zip(points, values)):
        others = [tm for m, tm in enumerate(points) if m != k]
        denom = F(1)
        for tm in others:
            denom *= tk - tm
        # t-coefficient of prod (t - t_m) = sum_m prod_{l != m} (-t_l)
        lin = F(0)
        for m in range(len(others)):
            term = F(1)
            for l, tl in enumerate(others):
                if l != m:
                    term *= -tl
            lin += term
        total = total + yk.scale(lin / denom)
    return total


def test_first_order_consistency_of_generators():
    # expanding the families to first order: rotation pull-back moves by -2 L_ij, boost by +2 K_i
    rng = random.Random(9)
    for _ in range(6):
        p = random_polynomial(rng, 2, 3)
        d = p.degree()
        if d < 1:
            continue
        rot = (1, lambda t: rational_rotation(2, 1, 2, t, "minkowski"))
        boost = (-1, lambda t: rational_boost(2, 2, t))
        assert _first_order_coefficient(p, rot, d) == lie_derivative(p, Generator("rotation", 1, 2)).scale(-2)
        assert _first_order_coefficient(p, boost, d) == lie_derivative(p, Generator("boost", 2)).scale(2)
