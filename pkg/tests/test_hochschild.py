from fractions import Fraction

import pytest
from hypothesis import given

from assoc2 import linalg
from assoc2.coderivation import Coderivation, decleene_cocycle, decleene_map, phi, psi
from assoc2.hochschild import (
    NotACodifferentialError,
    coboundary,
    coboundary_matrix,
    cohomology,
    cohomology_dims,
    component_cohomology_dims,
    extend_to_cocycle,
    is_coboundary,
    is_codifferential,
    is_cocycle,
    represents_same_classes,
    verify_d_squared,
)
from assoc2.moduli import standard_codifferential
from strategies import homogeneous

D = {k: standard_codifferential(k) for k in range(1, 7)}
TABLE = {
    1: [2, 0, 0, 0, 0, 0, 0],
    2: [2, 1, 1, 1, 1, 1, 1],
    3: [0] * 7,
    4: [0] * 7,
    5: [2, 1, 1, 1, 1, 1, 1],
    6: [2] * 7,
}


def test_coboundary_examples():
    assert coboundary(D[3], phi("", 2)) == -phi("1", 1)
    assert coboundary(D[2], phi("", 1)).is_zero()
    assert coboundary(D[4], Coderivation.zero()).is_zero()


def test_rejects_non_codifferentials():
    with pytest.raises(NotACodifferentialError):
        coboundary(psi("22", 1) + psi("11", 2), phi("", 1))
    with pytest.raises(NotACodifferentialError):
        cohomology(phi("1", 1))
    assert not is_codifferential(psi("1", 1))
    assert is_codifferential(Coderivation.zero())


def test_coboundary_matrix_examples():
    m = coboundary_matrix(D[2], 0)
    assert m.shape == (4, 2)
    assert all(v == 0 for row in m.dense() for v in row)
    # H^0(d1) = dim C^0 forces D_0 = 0, so H^1(d1) = 0 forces D_1 injective
    assert coboundary_matrix(D[1], 0).rank() == 0
    assert coboundary_matrix(D[1], 1).rank() == 4


@pytest.mark.parametrize("k", range(1, 7))
def test_table_dims_to_degree_six(k):
    assert cohomology_dims(D[k], 6) == TABLE[k]
    assert cohomology(D[k], 6).dims == TABLE[k]


def test_cocycle_and_coboundary_examples():
    assert is_cocycle(D[2], psi("11", 1))
    assert not is_cocycle(D[3], phi("", 2))
    for k in range(1, 7):
        assert is_cocycle(D[k], D[k])
        assert is_coboundary(D[k], D[k]) is not None


@pytest.mark.parametrize("k", range(1, 7))
def test_d_squared_matrix_identity(k):
    for n in range(5):
        assert verify_d_squared(D[k], n)


def test_d_squared_zero_codifferential():
    assert all(verify_d_squared(Coderivation.zero(), n) for n in range(3))


@pytest.mark.parametrize("k", range(1, 7))
def test_representatives_are_nontrivial_cocycles(k):
    report = cohomology(D[k], 4)
    for n, deg in enumerate(report.degrees):
        assert len(deg.representatives) == deg.dim
        for r in deg.representatives:
            assert is_cocycle(D[k], r)
            if n:
                assert is_coboundary(D[k], r) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_d2_classes_are_all_ones(n):
    rep = cohomology(D[2], n)[n].representatives
    assert represents_same_classes(D[2], rep, [phi((1,) * n, 1)])


def test_d1_two_cocycles_are_coboundaries():
    for z in [psi("11", 1), psi("22", 2), psi("12", 2) + psi("21", 2) - psi("22", 1)]:
        if is_cocycle(D[1], z):
            x = is_coboundary(D[1], z)
            assert x is not None and coboundary(D[1], x) == z


@pytest.mark.parametrize("k", [1, 2, 5, 6])
@given(xi=homogeneous(2))
def test_coboundaries_have_preimages(k, xi):
    f = coboundary(D[k], xi)
    x = is_coboundary(D[k], f)
    assert x is not None
    assert coboundary(D[k], x) == f


def test_rank_nullity_ledger():
    for k in range(1, 7):
        prev = 0
        for n in range(5):
            mat = coboundary_matrix(D[k], n)
            r = mat.rank()
            kernel = len(linalg.nullspace(mat.rows, mat.shape[1]))
            assert r + kernel == 2 ** (n + 1)
            assert cohomology(D[k], n)[n].dim == kernel - prev
            prev = r


def test_d6_component_two_is_a_complex():
    assert component_cohomology_dims(D[6], 2, 5) == [1] * 6


def test_extension_of_component_cocycle():
    eta = extend_to_cocycle(D[6], phi("2", 2), 1)
    assert eta is not None
    assert is_cocycle(D[6], phi("2", 2) + eta)


def test_cohomology_json_shape():
    js = cohomology(D[2], 2).to_json()
    assert js["dims"] == [2, 1, 1]
    assert js["degrees"]["2"]["representatives"] == ["psi[11->1]"]


def _theta_power(f, n):
    for _ in range(n):
        f = decleene_map(f)
    return f


@pytest.mark.parametrize("n", range(3))
def test_odd_decleene_base_case(n):
    chosen = _theta_power(phi("2", 1), n)
    assert chosen.degree() == 2 * n + 1
    assert is_cocycle(D[6], chosen) and is_coboundary(D[6], chosen) is None
    rejected = _theta_power(phi("21", 1), n)
    assert rejected.degree() == 2 * n + 2
    assert not is_cocycle(D[6], rejected)


@pytest.mark.parametrize("n", range(7))
def test_decleene_cocycles_span_d6_cohomology(n):
    ch2 = decleene_cocycle(n, 2)
    full = ch2 + extend_to_cocycle(D[6], ch2, 1)
    reps = cohomology(D[6], n)[n].representatives
    assert represents_same_classes(D[6], reps, [decleene_cocycle(n, 1), full])
