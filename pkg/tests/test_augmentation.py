import pytest

from lambdacl.augmentation import (augmentation_basis, augmentation_power_lattice, power_lattice,
                                   power_lattice_bruteforce)
from lambdacl.chartab import load_table


@pytest.mark.parametrize("m", range(1, 7))
def test_c2_powers_are_scalar_multiples(m):
    a = augmentation_power_lattice(load_table("c2"), m)
    assert a.invariants == [2 ** (m - 1)]
    assert a.exponent == m - 1


@pytest.mark.parametrize("name,expected", [("c2", 2), ("c3", 3), ("c4", 4), ("c5", 5)])
def test_index_of_square(name, expected):
    assert augmentation_power_lattice(load_table(name), 2).index == expected


# frozen from the iterated computation after cross-checking against brute force
FROZEN = {
    "c3": [[1, 1], [1, 3], [3, 3], [3, 9], [9, 9]],
    "c4": [[1, 1, 1], [1, 1, 4], [1, 2, 8], [2, 2, 16], [2, 4, 32]],
}


@pytest.mark.parametrize("name,l", [("c3", 3), ("c4", 2)])
def test_prime_power_indices(name, l):
    t = load_table(name)
    for m in range(1, 6):
        a = augmentation_power_lattice(t, m)
        assert a.invariants == FROZEN[name][m - 1]
        assert a.prime == l and a.index_is_prime_power
        assert a.exponent is not None


@pytest.mark.parametrize("name", ["c2", "c3", "c4", "c2xc2", "s3"])
def test_iterated_matches_bruteforce(name):
    t = load_table(name)
    for m in range(1, 5):
        it, bf = power_lattice(t, m), power_lattice_bruteforce(t, m)
        assert it.contains_lattice(bf) and bf.contains_lattice(it)


def test_basis_lies_in_augmentation_ideal():
    t = load_table("a4")
    assert all(x.degree == 0 for x in augmentation_basis(t))
    assert len(augmentation_basis(t)) == t.rank - 1


def test_non_prime_power_group_has_no_prime():
    a = augmentation_power_lattice(load_table("s3"), 2)
    assert a.prime is None and a.index == 6
