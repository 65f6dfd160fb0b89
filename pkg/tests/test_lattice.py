import itertools
import math

import pytest
from hypothesis import given, strategies as st

from lambdacl.lattice import (AbGroup, GroupHom, LatticeSolver, det, equivariant_hom_group, hom_group,
                              integer_kernel, invariant_factors, matmul, quotient, smith_normal_form, subgroup)

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices)
def test_snf_decomposition(M):
    n = len(M[0])
    U, D, V = smith_normal_form(M, n)
    assert matmul(matmul(U, M), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(M), n))]
    assert all(D[i][j] == 0 for i in range(len(M)) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(matrices)
def test_snf_determinantal_divisors(M):
    # oracle: d_1 ... d_k = gcd of k x k minors
    n = len(M[0])
    inv = invariant_factors(M, n)
    rows, cols = range(len(M)), range(n)
    prod = 1
    for k, d in enumerate(inv, start=1):
        minors = [det([[M[r][c] for c in cs] for r in rs])
                  for rs in itertools.combinations(rows, k) for cs in itertools.combinations(cols, k)]
        g = math.gcd(*minors) if minors else 0
        prod *= d
        assert prod == g


@pytest.mark.parametrize("M,expected", [
    ([[2, 4], [6, 8]], [2, 4]),
    ([[3, 0], [0, 5]], [1, 15]),
    ([[0, 0], [0, 0]], [0, 0]),
])
def test_snf_examples(M, expected):
    assert invariant_factors(M) == expected


def brute_hom_count(A: AbGroup, B: AbGroup) -> int:
    # A, B finite: count generator images respecting the orders
    elems = list(B.elements())
    count = 0
    for imgs in itertools.product(elems, repeat=A.ngens):
        if all(B.is_zero([o * x for x in img]) for o, img in zip(A.orders, imgs)):
            count += 1
    return count


@pytest.mark.parametrize("a,b", [("4", "6"), ("2,2", "4"), ("3", "9"), ("2,4", "2,6"), ("5", "3")])
def test_hom_group_order_matches_enumeration(a, b):
    A, B = AbGroup.parse(a), AbGroup.parse(b)
    assert hom_group(A, B).group.order() == brute_hom_count(A, B)


def test_hom_examples():
    assert hom_group(AbGroup((4,)), AbGroup((6,))).group.invariants == (2,)
    assert hom_group(AbGroup((2,)), AbGroup((0,))).group.is_trivial()
    assert hom_group(AbGroup((0,)), AbGroup((4, 0))).group.invariants == (4, 0)


def test_quotient_and_subgroup():
    Z2 = AbGroup((0, 0))
    Q = quotient(Z2, [[2, 0]])
    assert Q.group.invariants == (2, 0)
    assert Q.project([2, 0]) == Q.group.zero()
    S = subgroup(AbGroup((4,)), [[2]])
    assert S.group.invariants == (2,)


def test_equivariant_hom_examples():
    swap = [[0, 1], [1, 0]]
    C = AbGroup((4,))
    H = equivariant_hom_group(2, swap, C, GroupHom.identity(C))
    assert H.group.invariants == (4,)
    C5 = AbGroup((5,))
    H = equivariant_hom_group(1, [[1]], C5, GroupHom.scalar(C5, 2))
    assert H.group.is_trivial()


def test_equivariant_hom_rejects_singular_action():
    C = AbGroup((4,))
    with pytest.raises(ValueError):
        equivariant_hom_group(2, [[1, 1], [1, 1]], C, GroupHom.identity(C))


def test_grouphom_validates_relations():
    with pytest.raises(ValueError):
        GroupHom(AbGroup((2,)), AbGroup((3,)), [[1]])
    GroupHom(AbGroup((2,)), AbGroup((4,)), [[2]])


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_lattice_solver_membership(gens, coeffs):
    L = LatticeSolver(gens, 3)
    v = [sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(3)]
    y = L.solve(v)
    assert y is not None
    assert [sum(c * b[i] for c, b in zip(y, L.basis)) for i in range(3)] == v


@given(matrices)
def test_integer_kernel(M):
    n = len(M[0])
    for v in integer_kernel(M, n):
        assert all(sum(r[j] * v[j] for j in range(n)) == 0 for r in M)


def test_parse_and_str():
    A = AbGroup.parse("4,0")
    assert A.orders == (4, 0) and not A.is_finite()
    assert AbGroup.parse("").is_trivial()
    assert AbGroup((2, 3)).invariants == (6,)
    with pytest.raises(ValueError):
        AbGroup.parse("4,x")
