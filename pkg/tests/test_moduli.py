from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assoc2.coderivation import bracket, psi
from assoc2.moduli import (
    SWAP,
    AlgebraClass,
    MultiplicationTable,
    NonAssociativeError,
    SingularAutomorphismError,
    apply_automorphism,
    associativity_defect,
    classify,
    classify_codifferential,
    codifferential_to_table,
    det2,
    invariants,
    is_associative,
    matmul2,
    standard_codifferential,
    standard_table,
    table_to_codifferential,
    zero_table,
)
from strategies import fractions

IDENTITY = ((1, 0), (0, 1))

matrices = st.tuples(st.tuples(fractions, fractions), st.tuples(fractions, fractions))
invertible = matrices.filter(lambda g: det2(g) != 0)
tables = st.lists(st.sampled_from([Fraction(0), Fraction(1), Fraction(-1), Fraction(2)]), min_size=8, max_size=8).map(
    lambda v: MultiplicationTable(tuple(v))
)


def test_standard_codifferentials():
    assert standard_codifferential(6) == psi("22", 1)
    assert standard_codifferential(5) == psi("22", 2) + psi("12", 1) + psi("21", 1)
    with pytest.raises(ValueError):
        standard_codifferential(7)


@pytest.mark.parametrize("k", range(1, 7))
def test_table_codifferential_correspondence(k):
    m = standard_table(k)
    assert table_to_codifferential(m) == standard_codifferential(k)
    assert codifferential_to_table(standard_codifferential(k)) == m
    assert is_associative(m)
    assert classify(m) == AlgebraClass(f"d{k}")


def test_zero_table():
    assert table_to_codifferential(zero_table()).is_zero()
    assert is_associative(zero_table())
    assert classify(zero_table()) == AlgebraClass.ZERO


def test_non_associative_example():
    # x^2 = theta, theta^2 = x
    m = MultiplicationTable.from_products({(1, 1): (0, 1), (2, 2): (1, 0)})
    assert not is_associative(m)
    with pytest.raises(NonAssociativeError) as err:
        classify(m)
    assert err.value.triple == associativity_defect(m)


def test_automorphism_examples():
    m = standard_table(3)
    assert apply_automorphism(IDENTITY, m) == m
    assert apply_automorphism(SWAP, standard_table(1)) == standard_table(1)
    with pytest.raises(SingularAutomorphismError):
        apply_automorphism(((1, 2), (2, 4)), m)


def test_invariants_examples():
    d5 = invariants(standard_table(5))
    assert d5.is_commutative and d5.has_two_sided_identity and not d5.nilpotent
    d3 = invariants(standard_table(3))
    assert not d3.is_commutative and d3.has_right_identity and not d3.has_left_identity
    d6 = invariants(standard_table(6))
    assert d6.nilpotent and d6.square_dim == 1


def test_rescaled_idempotent_is_d1():
    m = MultiplicationTable.from_products({(2, 2): (0, 1), (1, 1): (3, 0)})
    assert classify(m) == AlgebraClass.D1


def test_gaussian_rationals():
    # 1 = theta, x^2 = -theta
    m = MultiplicationTable.from_products({(2, 2): (0, 1), (1, 1): (0, -1), (1, 2): (1, 0), (2, 1): (1, 0)})
    assert classify(m) == AlgebraClass.QUADRATIC_FIELD_EXTENSION
    assert classify(m).over_closure() == AlgebraClass.D1


def test_classify_codifferential_rejects_non_associative():
    with pytest.raises(NonAssociativeError):
        classify_codifferential(psi("11", 2) + psi("22", 1))


@pytest.mark.parametrize("k", range(1, 7))
@given(g=invertible)
def test_classifier_is_invariant(k, g):
    m = apply_automorphism(g, standard_table(k))
    assert is_associative(m)
    assert bracket(table_to_codifferential(m), table_to_codifferential(m)).is_zero()
    assert classify(m) == AlgebraClass(f"d{k}")


@given(tables)
def test_bracket_vanishes_iff_associative(m):
    d = table_to_codifferential(m)
    assert bracket(d, d).is_zero() == is_associative(m)


@given(tables)
def test_round_trip(m):
    assert codifferential_to_table(table_to_codifferential(m)) == m


@given(invertible, invertible, st.integers(1, 6))
def test_composition_law(g, h, k):
    m = standard_table(k)
    assert apply_automorphism(h, apply_automorphism(g, m)) == apply_automorphism(matmul2(g, h), m)


@given(tables, invertible)
def test_associativity_is_invariant(m, g):
    assert is_associative(apply_automorphism(g, m)) == is_associative(m)
