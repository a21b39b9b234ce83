import pytest

from dalembert.invariance import CanonicalForm, Witness, classify_lorentz, classify_rotation
from dalembert.io.generate import gen_instances, perturbation_monomials
from dalembert.operators import constant_symbol, is_translation_invariant


def test_invariant_round_trip_seed_1():
    ops = gen_instances(1, "minkowski", 2, 4, 10, "invariant")
    for op in ops:
        assert op.m <= 4
        cf = classify_lorentz(constant_symbol(op))
        assert isinstance(cf, CanonicalForm)
        assert cf.expand(2) == constant_symbol(op)
        assert cf.coeffs[-1]


def test_perturbed_seed_1():
    for op in gen_instances(1, "minkowski", 2, 4, 10, "perturbed"):
        assert isinstance(classify_lorentz(constant_symbol(op)), Witness)
    for op in gen_instances(1, "euclidean", 1, 4, 10, "perturbed"):
        assert isinstance(classify_rotation(constant_symbol(op)), Witness)


def test_variable_kind_breaks_translation():
    for op in gen_instances(1, "euclidean", 3, 2, 10, "variable"):
        assert not is_translation_invariant(op)
        assert not any(a.mentions(0) for _, a in op.items())


def test_count_zero():
    assert gen_instances(1, "minkowski", 2, 4, 0, "perturbed") == []
    assert gen_instances(1, "euclidean", 1, 0, 0, "perturbed") == []


def test_reproducible():
    a = gen_instances(42, "minkowski", 3, 6, 8, "perturbed")
    assert a == gen_instances(42, "minkowski", 3, 6, 8, "perturbed")
    assert a != gen_instances(43, "minkowski", 3, 6, 8, "perturbed")


def test_euclidean_n1_excludes_invariant_monomials():
    # xi1^2 and xi1^4 are |xi|^2 and |xi|^4 when n = 1
    assert perturbation_monomials("euclidean", 1, 4) == ((0, 1), (0, 3))


def test_impossible_requests():
    with pytest.raises(ValueError, match="no perturbed instance"):
        gen_instances(1, "minkowski", 2, 0, 3, "perturbed")
    with pytest.raises(ValueError):
        gen_instances(1, "minkowski", 7, 2, 1, "invariant")
    with pytest.raises(ValueError):
        gen_instances(1, "minkowski", 2, 11, 1, "invariant")
    with pytest.raises(ValueError):
        gen_instances(1, "minkowski", 2, 2, 1, "mixed")
    with pytest.raises(ValueError):
        gen_instances(1, "lorentzian", 2, 2, 1, "invariant")
