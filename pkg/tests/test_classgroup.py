import itertools
import math

import pytest
from hypothesis import given, strategies as st

from lambdacl.chartab import load_table
from lambdacl.classgroup import (apply_on, build_classgroup, compose_on, h1_class_map, h1_model, ind_subgroup,
                                 reduce_matrix, sigma_on_cl, sigma_on_quotient, verify_cnt_duality,
                                 verify_unramified_formula)
from lambdacl.lattice import AbGroup, identity
from lambdacl.lambda_ops import adjoint_matrix


def test_c2_trivial_action_full_hom():
    m = build_classgroup(load_table("c2"), 1, AbGroup((4,)))
    assert m.H.invariants == (4, 4)


def test_zero_classgroup():
    m = build_classgroup(load_table("s3"), 1, AbGroup(()))
    assert m.H.is_trivial()
    ind = ind_subgroup(m)
    assert ind.quotient.group.is_trivial()


def test_c3_frobenius_example_against_enumeration():
    t, C = load_table("c3"), AbGroup((3,))
    m = build_classgroup(t, 2, C, [[2]])
    assert m.H.invariants == (3,)
    found = [vals for vals in itertools.product(range(3), repeat=3) if m.is_equivariant([list(vals)])]
    assert sorted(found) == [(0, 0, 0), (0, 1, 2), (0, 2, 1)]
    F = m.generator_matrices()[0][0]
    assert F[0] == 0 and (2 * F[1]) % 3 == F[2]


def test_q_must_be_coprime():
    with pytest.raises(ValueError):
        build_classgroup(load_table("c4"), 2, AbGroup((4,)))


def test_phi_must_be_endomorphism():
    with pytest.raises(ValueError):
        build_classgroup(load_table("c2"), 1, AbGroup((4,)), [[1, 0]])


def test_c5_sigma2_is_precomposition_with_cube():
    t = load_table("c5")
    m = build_classgroup(t, 1, AbGroup((25,)))
    sig = sigma_on_cl(2, m)
    # oracle: column a of F o adj(psi^2) is F applied to chi_(3a)
    for z, F in zip(itertools.count(), m.generator_matrices()):
        img = m.element_matrix(apply_on(m.H, sig, [int(i == z) for i in range(m.H.ngens)]))
        for a in range(5):
            assert img[0][a] % 25 == F[0][(3 * a) % 5] % 25


@pytest.mark.parametrize("name,q,C", [("c5", 1, "25"), ("c3", 2, "3"), ("s3", 1, "4,0"), ("c2xc4", 3, "4,8")])
def test_composition_law(name, q, C):
    phi = [[2]] if name == "c3" else None
    m = build_classgroup(load_table(name), q, AbGroup.parse(C), phi)
    n, e = m.table.order, m.table.exponent
    ks = [k for k in range(1, 13) if math.gcd(k, n) == 1]
    for k in ks:
        for l in ks:
            kl = (k * l - 1) % e + 1
            assert compose_on(m.H, sigma_on_cl(k, m), sigma_on_cl(l, m)) == reduce_matrix(m.H, sigma_on_cl(kl, m))


def test_inverse_pair_gives_identity():
    m = build_classgroup(load_table("c5"), 1, AbGroup((25,)))
    assert compose_on(m.H, sigma_on_cl(2, m), sigma_on_cl(3, m)) == identity(m.H.ngens)
    assert reduce_matrix(m.H, sigma_on_cl(6, m)) == identity(m.H.ngens)


def test_sigma_needs_coprime_k():
    m = build_classgroup(load_table("c4"), 1, AbGroup((4,)))
    with pytest.raises(ValueError):
        sigma_on_cl(2, m)


def test_ind_subgroup_c2():
    m = build_classgroup(load_table("c2"), 1, AbGroup((4,)))
    ind = ind_subgroup(m)
    assert ind.sub.group.invariants == (4,)
    assert ind.quotient.group.invariants == (4,)
    # brute-force coset count: |H| / |Ind|
    assert m.H.order() // ind.sub.group.order() == 4


@pytest.mark.parametrize("name", ["c2", "c3", "c4", "c5", "c2xc2", "c2xc4", "c6", "c8", "c12"])
def test_induced_classes_fixed(name):
    t = load_table(name)
    m = build_classgroup(t, 1, AbGroup((4, 0)))
    ind = ind_subgroup(m)
    for k in range(1, 13):
        if math.gcd(k, t.order) == 1:
            sig = sigma_on_cl(k, m)
            assert all(apply_on(m.H, sig, z) == m.H.reduce(z) for z in ind.generators)


def test_ind_subgroup_requires_fixed_C0():
    m = build_classgroup(load_table("c2"), 1, AbGroup((5,)), [[2]])
    with pytest.raises(ValueError):
        ind_subgroup(m, [[1]])


def test_quotient_action_commutes():
    m = build_classgroup(load_table("c5"), 1, AbGroup((25,)))
    ind = ind_subgroup(m)
    Q = ind.quotient
    for k in (2, 3, 4):
        sig, sbar = sigma_on_cl(k, m), sigma_on_quotient(ind, k)
        for i in range(m.H.ngens):
            z = [int(i == j) for j in range(m.H.ngens)]
            assert Q.project(apply_on(m.H, sig, z)) == apply_on(Q.group, sbar, Q.project(z))


@pytest.mark.parametrize("name,k", [("c5", 2), ("s3", 5), ("c2xc4", 3), ("q8", 3), ("c7", 1)])
def test_cnt_duality(name, k):
    m = build_classgroup(load_table(name), 1, AbGroup((9, 0)))
    assert verify_cnt_duality(m, k).passed


def test_h1_class_map_example():
    t, C = load_table("c5"), AbGroup((25, 0))
    m, h1 = build_classgroup(t, 1, C), h1_model(t, C)
    h = h1.element([(5, 0)])
    F = m.element_matrix(h1_class_map(h, h1, m))
    # chi_a -> a * (5, 0)
    assert [F[0][a] % 25 for a in range(5)] == [0, 5, 10, 15, 20]
    assert all(F[1][a] == 0 for a in range(5))
    for bad in ([(1, 0)], [(0, 1)]):
        with pytest.raises(ValueError):
            h1.element(bad)         # 5 * image must vanish in Z/25 + Z


def test_h1_map_is_additive():
    t, C = load_table("c2xc4"), AbGroup((4, 8))
    m, h1 = build_classgroup(t, 1, C), h1_model(t, C)
    gens = h1.generators()
    for a, b in itertools.product(gens, repeat=2):
        s = h1.group.reduce([x + y for x, y in zip(a, b)])
        lhs = h1_class_map(s, h1, m)
        rhs = m.H.reduce([x + y for x, y in zip(h1_class_map(a, h1, m), h1_class_map(b, h1, m))])
        assert lhs == rhs


@given(st.sampled_from(["c5", "c7", "c2xc4"]), st.sampled_from(["25", "4,8", "0,49"]), st.integers(1, 9),
       st.data())
def test_unramified_formula(name, cspec, k, data):
    t = load_table(name)
    k = k if math.gcd(k, t.order) == 1 else 1
    C = AbGroup.parse(cspec)
    m, h1 = build_classgroup(t, 1, C), h1_model(t, C)
    h = data.draw(st.lists(st.integers(-5, 5), min_size=h1.group.ngens, max_size=h1.group.ngens))
    assert verify_unramified_formula(h1.group.reduce(h), k, h1, m).passed


def test_unramified_example_c5():
    t, C = load_table("c5"), AbGroup((25, 0))
    m, h1 = build_classgroup(t, 1, C), h1_model(t, C)
    h = h1.element([(5, 0)])
    F = m.element_matrix(h1_class_map(h, h1, m))
    G = [[sum(F[r][b] * adjoint_matrix(t, 2).matrix[b][a] for b in range(5)) for a in range(5)] for r in range(2)]
    # sigma^2(cl h)(chi^a) = h(chi^(3a)) = 3 cl(h)(chi^a)
    assert [G[0][a] % 25 for a in range(5)] == [(15 * a) % 25 for a in range(5)]
