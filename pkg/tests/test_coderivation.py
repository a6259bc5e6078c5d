from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assoc2.coderivation import (
    ODD_PLANE,
    BasisCoderivation,
    Coderivation,
    GradedSpace,
    MixedParityError,
    SpaceMismatchError,
    bracket,
    cochain_basis,
    compose,
    corestriction_of_composite,
    decleene_cocycle,
    decleene_map,
    evaluate_extended,
    lambda_insert,
    parity_of,
    phi,
    psi,
)
from assoc2.moduli import standard_codifferential
from strategies import coderivations, homogeneous


def test_parity_examples():
    assert parity_of(psi("22", 2)) == 1
    assert parity_of(phi("12", 1)) == 1
    assert parity_of(phi("", 2)) == 1
    assert parity_of(phi("1", 1)) == 0


def test_mixed_parity_is_rejected():
    with pytest.raises(MixedParityError):
        parity_of(phi("1", 1) + phi("", 1))


def test_index_out_of_range():
    with pytest.raises(ValueError):
        phi("13", 1)


def test_compose_examples():
    assert compose(psi("12", 1), psi("22", 2)) == -phi("122", 1)
    assert compose(psi("22", 2), psi("22", 2)).is_zero()
    assert compose(phi("22", 1), phi("11", 1)).is_zero()


def test_compose_space_mismatch():
    other = GradedSpace((0, 1))
    with pytest.raises(SpaceMismatchError):
        compose(phi("1", 1), phi("1", 1, space=other))


def test_bracket_examples():
    d2, d3 = standard_codifferential(2), standard_codifferential(3)
    assert bracket(d2, d2).is_zero()
    assert bracket(d3, phi("", 2)) == -phi("1", 1)
    even = phi("1", 2) + 3 * phi("2", 1)
    assert bracket(even, even).is_zero()


def test_evaluate_extended_examples():
    assert evaluate_extended(psi("22", 2), (2, 2)) == {(2,): 1}
    assert evaluate_extended(psi("22", 2), (2, 2, 2)) == {}
    assert evaluate_extended(phi("", 2), (1,)) == {(2, 1): 1, (1, 2): -1}


def test_lambda_examples():
    assert lambda_insert((1,), phi("2", 1)) == phi("12", 1)
    f = phi("21", 2) - phi("", 1)
    assert lambda_insert((), f) == f
    assert lambda_insert((2, 1), phi("", 2)) == phi("21", 2)


def test_decleene_examples():
    assert decleene_map(phi("", 2)) == phi("21", 2) + phi("12", 2)
    assert decleene_map(Coderivation.zero()).is_zero()
    assert decleene_map(decleene_map(phi("", 1))) == phi("2121", 1) + phi("2112", 1) + phi("1221", 1) + phi("1212", 1)
    assert decleene_cocycle(0, 2) == phi("", 2)
    assert decleene_cocycle(2, 1) == phi("21", 1) + phi("12", 1)
    assert decleene_cocycle(1, 2) == phi("2", 2)


@pytest.mark.parametrize("n", range(8))
def test_decleene_cocycles_have_degree_n(n):
    for c in (1, 2):
        assert decleene_cocycle(n, c).degree() == n


def test_alternative_odd_reading_has_wrong_degree():
    # theta^n applied to phi^{21}_1 lands in degree 2n + 2, not 2n + 1
    assert decleene_map(phi("21", 1)).degree() == 4
    assert decleene_cocycle(3, 1).degree() == 3


@pytest.mark.parametrize("n", range(9))
def test_basis_count(n):
    basis = cochain_basis(n)
    assert len(basis) == 2 ** (n + 1) == len(set(basis))
    assert basis == sorted(basis, key=BasisCoderivation.sort_key)


@pytest.mark.parametrize("a", cochain_basis(0) + cochain_basis(1) + cochain_basis(2), ids=str)
def test_compose_matches_oracle(a):
    fa = Coderivation(ODD_PLANE, {a: 1})
    for n in range(4):
        for b in cochain_basis(n):
            fb = Coderivation(ODD_PLANE, {b: 1})
            deg = a.degree + b.degree - 1
            if deg >= 0:
                assert compose(fa, fb) == corestriction_of_composite(fa, fb, deg)


@given(homogeneous(2), homogeneous(3))
def test_compose_matches_oracle_on_combinations(f, g):
    expected = corestriction_of_composite(f, g, 4)
    assert compose(f, g) == expected


@given(homogeneous(1), homogeneous(2))
def test_degree_additivity(f, g):
    h = compose(f, g)
    if not h.is_zero():
        assert h.degrees() == {2}


@given(homogeneous(1), homogeneous(2))
def test_graded_antisymmetry(f, g):
    if f.is_zero() or g.is_zero():
        return
    sign = (-1) ** (parity_of(f) * parity_of(g))
    assert bracket(f, g) == -sign * bracket(g, f)


@given(homogeneous(1, 3), homogeneous(2, 3), homogeneous(1, 3))
def test_graded_jacobi(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    pf, pg = parity_of(f), parity_of(g)
    lhs = bracket(f, bracket(g, h))
    rhs = bracket(bracket(f, g), h) + (-1) ** (pf * pg) * bracket(g, bracket(f, h))
    assert lhs == rhs


@given(coderivations(), coderivations(), st.integers(-3, 3))
def test_compose_is_bilinear(f, g, k):
    h = psi("12", 1) + phi("1", 2)
    assert compose(f + g, h) == compose(f, h) + compose(g, h)
    assert compose(h, k * f) == k * compose(h, f)


def test_coderivation_arithmetic():
    f = phi("1", 1) + Fraction(1, 2) * phi("2", 2)
    assert (f - f).is_zero()
    assert 2 * f == f + f
    assert str(f) == "phi[1->1] + 1/2*phi[2->2]"
