import pytest

from lambdacl.chartab import decompose, load_table, pairing, to_virtual
from lambdacl.induction import cyclic_subgroup, induce, restrict, trivial_subgroup, SubgroupEmbedding


def test_induce_from_a3():
    s3 = load_table("s3")
    A3 = cyclic_subgroup(s3, s3.class_rep_element(2))
    assert A3.index == 2
    omega = A3.sub.irreducible(1).class_function()
    assert to_virtual(induce(A3, omega)).coords == (0, 0, 1)
    assert to_virtual(induce(A3, A3.sub.trivial().class_function())).coords == (1, 1, 0)


def test_restrict_std_to_a3():
    s3 = load_table("s3")
    A3 = cyclic_subgroup(s3, s3.class_rep_element(2))
    res = restrict(A3, s3.irreducible(2).class_function())
    assert [v.to_rational() for v in res.values] == [2, -1, -1]
    assert decompose(res).coefficients == (0, 1, 1)


@pytest.mark.parametrize("name", ["s3", "d4", "q8", "a4", "c2xc4"])
def test_induction_from_trivial_is_regular(name):
    G = load_table(name)
    one = trivial_subgroup(G)
    assert to_virtual(induce(one, one.sub.trivial().class_function())) == G.regular()


@pytest.mark.parametrize("name", ["s3", "d4", "q8", "a4"])
def test_frobenius_reciprocity_on_cyclic_subgroups(name):
    G = load_table(name)
    for g in range(G.order):
        H = cyclic_subgroup(G, g)
        for a in range(H.sub.rank):
            f = H.sub.irreducible(a).class_function()
            ind = induce(H, f)
            for b in range(G.rank):
                chi = G.irreducible(b).class_function()
                assert pairing(ind, chi) == pairing(f, restrict(H, chi))


def test_bad_subgroup_rejected():
    s3 = load_table("s3")
    sub = load_table("c2")
    e = s3.identity_element()
    other = next(g for g in range(s3.order) if g != e and s3.element_classes[g] == 2)
    with pytest.raises(ValueError):
        SubgroupEmbedding(s3, (e, other), sub, (0, 1))
