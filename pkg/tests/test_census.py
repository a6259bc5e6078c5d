import pytest

from assoc2.census import (
    UnsupportedPrimeError,
    enumerate_finite_field,
    general_linear_group,
    reduce_table,
    standard_orbits,
)
from assoc2.moduli import MultiplicationTable, is_associative, standard_table

GOLDEN = {2: (28, 8), 3: (121, 8)}


@pytest.fixture(scope="module", params=[2, 3])
def census(request):
    return enumerate_finite_field(request.param)


def test_group_orders():
    assert len(general_linear_group(2)) == 6
    assert len(general_linear_group(3)) == 48


def test_golden_numbers(census):
    assert (census.associative_count, census.orbit_count) == GOLDEN[census.p]


def test_orbits_partition_associative_tables(census):
    assert sum(o.size for o in census.orbits) == census.associative_count
    assert len(census.orbit_of) == census.associative_count


def test_class_constant_on_orbits(census):
    assert all(len(o.classes_seen) == 1 for o in census.orbits)


def test_integer_fast_path_agrees(census):
    for t in list(census.orbit_of)[:40]:
        assert is_associative(MultiplicationTable.from_constants(t, census.p))


def test_standard_tables_in_distinct_orbits_over_f3():
    c = enumerate_finite_field(3)
    orbits = standard_orbits(c)
    assert len(set(orbits.values())) == 6
    for k, idx in orbits.items():
        assert c.orbits[idx].algebra_class.value == f"d{k}"


def test_deterministic():
    assert enumerate_finite_field(2).to_json() == enumerate_finite_field(2).to_json()


def test_reduce_table():
    assert reduce_table(standard_table(5), 3) == (0, 0, 1, 0, 1, 0, 0, 1)


def test_unsupported_prime():
    with pytest.raises(UnsupportedPrimeError):
        enumerate_finite_field(7)
