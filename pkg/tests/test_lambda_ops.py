import itertools
import math

import pytest
from hypothesis import given, strategies as st

from conftest import table_and_chars
from lambdacl.chartab import load_table, pairing, product
from lambdacl.lambda_ops import (adams, adams_adjoint, adams_composition_holds, adams_matrix, adjoint_matrix,
                                 compositions, exterior_power, exterior_powers, power_pullback, pullback_matrix,
                                 sigma_difference_expansion, symmetric_power, symmetric_powers)


@pytest.fixture
def s3():
    return load_table("s3")


def test_adams_examples(s3):
    assert adams(2, s3.irreducible(2)).coords == (1, -1, 1)
    assert adams(5, s3.regular()).coords == (1, 1, 2)
    assert adams(1, s3.irreducible(2)) == s3.irreducible(2)


def test_symmetric_and_exterior_examples(s3):
    std = s3.irreducible(2)
    assert symmetric_power(2, std).coords == (1, 0, 1)
    # Sym^3 of the 2-dim S3 representation is 1 + sgn + std
    assert symmetric_power(3, std).coords == (1, 1, 1)
    assert symmetric_power(2, -s3.trivial()).coords == (0, 0, 0)
    assert exterior_power(2, std).coords == (0, 1, 0)
    assert exterior_power(3, std) == s3.zero()


def test_adjoint_example_on_c5():
    c5 = load_table("c5")
    assert adjoint_matrix(c5, 2) == pullback_matrix(c5, 3)
    assert adams_adjoint(2, c5.irreducible(1)).coords == (0, 0, 0, 1, 0)


def multiset_sigma(table, labels, k):
    """Oracle for abelian tables: sigma^k of a sum of linear characters is h_k of them."""
    inv = table.abelian_invariants
    counts = [0] * table.rank
    for combo in itertools.combinations_with_replacement(labels, k):
        total = tuple(sum(x[i] for x in combo) % n for i, n in enumerate(inv)) if combo else (0,) * len(inv)
        counts[table.element_labels.index(total)] += 1
    return tuple(counts)


@given(st.sampled_from(["c3", "c4", "c2xc2", "c5"]), st.lists(st.integers(0, 30), min_size=1, max_size=4),
       st.integers(0, 4))
def test_sigma_matches_multiset_oracle(name, picks, k):
    t = load_table(name)
    labels = [t.element_labels[p % t.rank] for p in picks]
    coords = [0] * t.rank
    for p in picks:
        coords[p % t.rank] += 1
    assert symmetric_power(k, t.character(coords)).coords == multiset_sigma(t, labels, k)


@given(table_and_chars(1))
def test_lambda_sigma_inverse_series(args):
    # sum_i (-1)^i lambda^i(x) sigma^(k-i)(x) = 0 for k >= 1
    t, x = args
    K = 4
    lam, sig = exterior_powers(x, K), symmetric_powers(x, K)
    for k in range(1, K + 1):
        acc = t.zero()
        for i in range(k + 1):
            term = product(lam[i], sig[k - i])
            acc = acc + term if i % 2 == 0 else acc - term
        assert acc == t.zero()


@given(table_and_chars(2))
def test_adams_ring_homomorphism(args):
    t, x, y = args
    for k in range(1, 6):
        assert adams(k, x + y) == adams(k, x) + adams(k, y)
        assert adams(k, product(x, y)) == product(adams(k, x), adams(k, y))


@given(table_and_chars(2), st.integers(1, 8))
def test_adjointness(args, k):
    t, x, y = args
    assert pairing(adams_adjoint(k, x), y) == pairing(x, adams(k, y))


@pytest.mark.parametrize("name", ["s3", "d4", "q8", "a4", "c12"])
def test_adams_composition(name):
    t = load_table(name)
    for k in range(1, 6):
        for l in range(1, 6):
            assert adams_composition_holds(t, k, l)


def test_adams_periodic_in_exponent(s3):
    assert adams_matrix(s3, 7, fresh=True) == adams_matrix(s3, 1)


@given(table_and_chars(2), st.integers(0, 4))
def test_difference_expansion(args, i):
    _, x, y = args
    assert sigma_difference_expansion(i, x, y).equal


def test_compositions_counts():
    assert list(compositions(0)) == [()]
    assert [len(list(compositions(n))) for n in range(1, 7)] == [2 ** (n - 1) for n in range(1, 7)]


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_pullback_is_inverse_of_adjoint(n):
    t = load_table(f"c{n}")
    for a in range(1, n):
        if math.gcd(a, n) == 1:
            x = t.irreducible(1)
            assert power_pullback(a, adams_adjoint(a, x)) == x


def test_pullback_rejects_non_abelian_and_non_coprime(s3):
    with pytest.raises(ValueError):
        pullback_matrix(s3, 5)
    with pytest.raises(ValueError):
        pullback_matrix(load_table("c4"), 2)
