import random
from fractions import Fraction

import pytest

from dalembert.groups import negation, rational_boost, time_reflection, transposition
from dalembert.invariance import (
    AlgebraicWitness,
    CanonicalForm,
    DeciderDisagreement,
    Witness,
    classify_lorentz,
    classify_operator,
    classify_rotation,
    invariant_space_dimension,
    lie_invariant,
    sampling_invariant,
    witness_search,
)
from dalembert.invariance.witness import candidate_elements, parameter_tiers
from dalembert.io.generate import gen_instances, perturbation_monomials, random_canonical
from dalembert.operators import (
    OperatorError,
    OperatorSpec,
    constant_symbol,
    euclidean_form,
    minkowski_form,
    operator_of,
)
from dalembert.polynomial import Polynomial
from dalembert.scalar import Scalar

F = Fraction


def mono(n, exps, c=1):
    return Polynomial.monomial(n, exps, c)


def b(*values):
    return tuple(Scalar.coerce(v) for v in values)


# rotation classifier


def test_rotation_invariant_example():
    assert classify_rotation(euclidean_form(2)) == CanonicalForm("euclidean", b(0, 1))


def test_rotation_odd_part_witness():
    w = classify_rotation(mono(2, (0, 3, 0)))
    assert isinstance(w, Witness)
    assert w.element == negation(2, [1], "euclidean")
    assert w.covector == b(1, 0)
    assert (w.lhs, w.rhs) == (Scalar(-1), Scalar(1))


def test_rotation_swap_witness():
    w = classify_rotation(mono(2, (0, 2, 0)) - mono(2, (0, 0, 2)))
    assert w.element == transposition(2, 1, 2, "euclidean")
    assert w.covector == b(1, 0)
    assert (w.lhs, w.rhs) == (Scalar(-1), Scalar(1))


def test_rotation_rejects_tau():
    with pytest.raises(ValueError, match="tau"):
        classify_rotation(minkowski_form(1))


def test_rotation_n1_only_needs_the_reflection():
    assert classify_rotation(mono(1, (0, 4)) + 3) == CanonicalForm("euclidean", b(3, 0, 1))
    assert isinstance(classify_rotation(mono(1, (0, 3))), Witness)


# Lorentz classifier


def test_lorentz_box():
    assert classify_lorentz(minkowski_form(2)) == CanonicalForm("minkowski", b(0, 1))


def test_lorentz_polynomial_in_box():
    q = minkowski_form(3)
    p = q * q + q.scale(5) - 7
    cf = classify_lorentz(p)
    assert cf.coeffs == b(-7, 5, 1)
    assert str(cf) == "box^2 + 5*box - 7"
    assert cf.expand(3) == p


def test_lorentz_boost_witness():
    p = mono(1, (2, 0)) + mono(1, (0, 2))
    w = classify_lorentz(p)
    assert w.element == rational_boost(1, 1, F(1, 2))
    assert w.covector == b(1, 0)
    assert (w.lhs, w.rhs) == (Scalar(F(41, 9)), Scalar(1))
    assert w.verify(p)


def test_lorentz_odd_part_refuted_by_reflection_or_minus_identity():
    q = minkowski_form(2)
    p = q * mono(2, (1, 0, 0))  # tau * q: every tau-coefficient is rotation invariant
    w = classify_lorentz(p)
    assert isinstance(w, Witness) and w.verify(p)


def test_lorentz_spatial_failure_is_embedded():
    p = minkowski_form(2) + mono(2, (0, 2, 0))  # tau^2 - xi2^2
    w = classify_lorentz(p)
    assert w.element.tag == "minkowski" and w.verify(p)


def test_zero_symbol_is_flagged():
    cf = classify_lorentz(Polynomial.zero(2))
    assert cf.is_zero and cf.coeffs == ()
    assert cf.to_json()["zero"] is True
    assert str(cf) == "0"


def test_round_trip_random_b_vectors():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(1, 4)
        cf = random_canonical(rng, "minkowski", 10)
        assert classify_lorentz(cf.expand(n)) == cf
        cf_e = random_canonical(rng, "euclidean", 10)
        assert classify_rotation(cf_e.expand(n)) == cf_e


def test_perturbation_flips_the_verdict():
    rng = random.Random(2)
    for space, classify in (("minkowski", classify_lorentz), ("euclidean", classify_rotation)):
        for n in (1, 2):
            cf = random_canonical(rng, space, 4)
            base = cf.expand(n)
            for e in perturbation_monomials(space, n, 4):
                p = base + mono(n, e, Scalar(1, -1))
                w = classify(p)
                assert isinstance(w, Witness), (space, e)
                assert w.verify(p)


def test_wrong_sign_partner():
    p = mono(2, (2, 0, 0)) + mono(2, (0, 2, 0)) + mono(2, (0, 0, 2))
    assert isinstance(classify_lorentz(p), Witness)


def test_crosscheck_disagreement_is_raised(monkeypatch):
    import dalembert.invariance.canonical as canonical

    monkeypatch.setattr(canonical, "lie_invariant", lambda p, tag: False)
    with pytest.raises(DeciderDisagreement):
        classify_lorentz(minkowski_form(1))


# witness search


def test_witness_search_examples():
    w = witness_search(mono(1, (1, 0)), "minkowski")
    assert w.element == time_reflection(1)
    assert w.covector == b(1, 0) and (w.lhs, w.rhs) == (Scalar(-1), Scalar(1))
    w = witness_search(mono(2, (0, 1, 0)), "euclidean")
    assert w.element == negation(2, [1], "euclidean")
    assert w.covector == b(1, 0) and (w.lhs, w.rhs) == (Scalar(-1), Scalar(1))
    p = mono(1, (2, 0)) + mono(1, (0, 2))
    w = witness_search(p, "minkowski")
    assert w.element == rational_boost(1, 1, F(1, 2))
    assert (w.lhs, w.rhs) == (Scalar(F(41, 9)), Scalar(1))


def test_witness_search_refuses_invariant_input():
    with pytest.raises(ValueError, match="invariant"):
        witness_search(minkowski_form(2), "minkowski")


def test_budget_exhaustion_gives_algebraic_witness():
    p = mono(1, (2, 0)) + mono(1, (0, 2))
    w = witness_search(p, "minkowski", budget=1)
    assert isinstance(w, AlgebraicWitness)
    assert w.generator == "boost(1)"
    assert w.polynomial == mono(1, (1, 1), 4)
    assert w.verify(p)
    assert w.to_json()["kind"] == "algebraic"


def test_witness_json_is_complete():
    p = mono(1, (2, 0)) + mono(1, (0, 2))
    data = classify_lorentz(p).to_json()
    assert data["kind"] == "group"
    assert data["element"]["tag"] == "minkowski"
    assert data["lhs"] == {"re": [41, 9], "im": [0, 1]}


def test_candidate_order_is_deterministic():
    first = [g.label for _, g in zip(range(12), candidate_elements(2, "minkowski"))]
    assert first[:5] == ["negate(tau)", "negate(xi1)", "negate(xi2)", "-I", "swap(xi1,xi2)"]
    assert first[5] == "rotation(1,2;t=1/2)"
    assert first == [g.label for _, g in zip(range(12), candidate_elements(2, "minkowski"))]


def test_parameter_tiers():
    tiers = parameter_tiers()
    assert next(tiers) == tuple(F(x) for x in ("1/2", "1/3", "2/3", "2", "3", "3/2"))
    assert next(tiers) == (F(1, 4), F(3, 4), F(4), F(4, 3))


# cross-check deciders


def test_three_deciders_agree_on_a_small_corpus():
    for space in ("minkowski", "euclidean"):
        for kind in ("invariant", "perturbed"):
            for op in gen_instances(77, space, 2, 4, 20, kind):
                p = constant_symbol(op)
                verdict = kind == "invariant"
                assert lie_invariant(p, space) == verdict
                assert sampling_invariant(p, space) == verdict


def test_sampling_oracle_sees_the_reflection():
    # tau^3 - tau xi^2 is annihilated by the boost generator but not time-reflection invariant
    p = minkowski_form(1) * mono(1, (1, 0))
    assert not lie_invariant(p, "minkowski")
    assert not sampling_invariant(p, "minkowski")


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("j", range(7))
def test_invariant_dimension(n, j):
    assert invariant_space_dimension(n, j) == (1 if j % 2 == 0 else 0)


def test_lorentz_invariant_dimension():
    assert [invariant_space_dimension(2, j, "minkowski") for j in range(5)] == [1, 0, 1, 0, 1]


# operator reports


def test_report_box_plus_one():
    q = minkowski_form(3)
    r = classify_operator(operator_of(q + 1))
    assert r.translation_invariant and r.full_invariant
    assert r.canonical.coeffs == b(1, 1)
    assert r.dilation_invariant is False


def test_report_complex_multiple_of_box():
    alpha = Scalar(2, 3)
    r = classify_operator(operator_of(minkowski_form(2).scale(alpha)))
    data = r.to_json()
    assert data["poincare"] == "yes"
    assert data["dilation"] == {"invariant": True}
    assert data["lorentz"]["b"] == [Scalar(0).to_json(), alpha.to_json()]
    assert data["homogeneous_degree"] == 2


def test_report_stops_after_translation_failure():
    op = OperatorSpec(1, 1, {(0, (1,)): Polynomial.variable(1, 0)})
    r = classify_operator(op)
    data = r.to_json()
    assert data["translation"] == "no"
    assert data["lorentz"] is None and data["dilation"] is None
    assert data["poincare"] == "no"
    assert data["translation_witness"]["j"] == 0


def test_report_poincare_iff_translation_and_lorentz():
    for kind in ("invariant", "perturbed", "variable"):
        for op in gen_instances(5, "minkowski", 2, 4, 10, kind):
            r = classify_operator(op)
            assert r.full_invariant == (r.translation_invariant and r.linear_invariant is True)
            assert r.full_invariant == (kind == "invariant")


def test_report_euclidean():
    r = classify_operator(operator_of(euclidean_form(3)), "euclidean")
    data = r.to_json()
    assert data["rotation"]["form"] == "lap"
    assert data["euclidean_motion"] == "yes"
    with pytest.raises(OperatorError, match="dt"):
        classify_operator(operator_of(minkowski_form(1)), "euclidean")
    with pytest.raises(OperatorError, match="mentions t"):
        classify_operator(OperatorSpec(1, 1, {(0, (1,)): Polynomial.variable(1, 0)}), "euclidean")


def test_report_text():
    text = classify_operator(operator_of(minkowski_form(1) + 2)).to_text()
    assert "lorentz           yes: box + 2" in text
    assert "dilation          no" in text
