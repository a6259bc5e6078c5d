from fractions import Fraction

import pytest

from assoc2.coderivation import phi, psi
from assoc2.deformation import (
    BUILTIN_FAMILIES,
    DeformationFamily,
    InvalidDirectionError,
    NonVersalFamilyError,
    d2_family,
    d5_family,
    d6_family,
    d6_printed_family,
    family_from_json,
    infinitesimal_basis,
    jump_census,
    obstruction,
    sample_solution_family,
    solution_families,
    specialize,
    unconstrained_family,
    verify_solution_family,
)
from assoc2.hochschild import coboundary, is_coboundary, represents_same_classes
from assoc2.moduli import AlgebraClass, standard_codifferential
from assoc2.scalar import UnassignedVariableError

D1 = AlgebraClass.D1


def test_infinitesimal_bases():
    assert infinitesimal_basis(standard_codifferential(2)) == [psi("11", 1)]
    assert infinitesimal_basis(standard_codifferential(5)) == [psi("11", 2)]
    d6 = standard_codifferential(6)
    printed = [psi("21", 2) + psi("12", 2) + psi("11", 1), psi("21", 1) + psi("12", 1)]
    assert represents_same_classes(d6, infinitesimal_basis(d6), printed)


def test_direction_validation():
    with pytest.raises(InvalidDirectionError):
        DeformationFamily(standard_codifferential(2), [("t", phi("1", 1))])
    with pytest.raises(InvalidDirectionError):
        DeformationFamily(standard_codifferential(3), [("t", psi("11", 2))])


def test_obstructions():
    assert obstruction(d2_family()).is_zero
    assert obstruction(d5_family()).is_zero
    assert obstruction(d6_family()).is_zero


def test_printed_d6_family_is_obstructed():
    res = obstruction(d6_printed_family())
    assert not res.is_zero
    assert "2*t1^2*phi[122->1]" in str(res.bracket_polynomial)
    with pytest.raises(NonVersalFamilyError):
        jump_census(d6_printed_family())


def test_d6_directions_are_cohomologous():
    d6 = standard_codifferential(6)
    diff = d6_printed_family().directions[0][1] - d6_family().directions[0][1]
    x = is_coboundary(d6, diff)
    assert x == phi("1", 2)
    assert coboundary(d6, x) == diff


def test_specialize():
    assert specialize(d2_family(), {"t": 0}) == standard_codifferential(2)
    assert specialize(d2_family(), {"t": 1}) == standard_codifferential(1)
    assert specialize(d6_family(), {"t1": 0, "t2": 0}) == standard_codifferential(6)
    with pytest.raises(UnassignedVariableError):
        specialize(d6_family(), {"t1": 1})


def test_d2_and_d5_jump_to_d1():
    g2 = jump_census(d2_family(), [{"t": t} for t in (1, 2, Fraction(-1, 3))])
    assert all(w.observed == D1 for w in g2.witnesses)
    g5 = jump_census(d5_family(), [{"t": t} for t in (1, -2)])
    assert all(w.observed.over_closure() == D1 for w in g5.witnesses)
    assert g2.edge_set() == {("d2", "d1")} and g5.edge_set() == {("d5", "d1")}


def test_d6_census_strata():
    g = jump_census(d6_family())
    assert {("d6", "d2"), ("d6", "d5")} <= g.edge_set()
    assert not {b for _, b in g.edge_set()} & {"d3", "d4"}
    for w in g.witnesses:
        t1, t2 = w.point["t1"], w.point["t2"]
        if t1 == t2 == 0:
            expected = {"d6"}
        elif t2 == 0:
            expected = {"d2"}
        elif t1 * t1 + 4 * t2 == 0:
            expected = {"d5"}
        else:
            expected = {"d1", "quadratic_field_extension"}
        assert w.observed.value in expected, w.point


@pytest.mark.parametrize("s", solution_families(), ids=lambda s: f"family{s.index}")
def test_solution_families_vanish(s):
    assert verify_solution_family(s)


def test_unconstrained_family_does_not_vanish():
    assert not verify_solution_family(unconstrained_family())


def test_family3_is_d1():
    s = solution_families()[2]
    assert sample_solution_family(s, {"a24": 1}) == D1


def test_family_nonvanishing_guard():
    s = solution_families()[7]
    with pytest.raises(ValueError):
        sample_solution_family(s, {v: 0 for v in s.free_variables})


def test_family_from_json():
    fam, grid = family_from_json({"base": "psi[22->2]", "directions": {"t": "psi[11->1]"}, "grid": {"t": ["1", "2"]}})
    assert fam.parameters == ["t"] and grid == [{"t": 1}, {"t": 2}]
    with pytest.raises(ValueError):
        family_from_json({"base": "psi[22->2]"})


def test_builtins_registered():
    assert set(BUILTIN_FAMILIES) == {"d2", "d5", "d6", "d6-printed"}
