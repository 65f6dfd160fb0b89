"""Subgroups of catalog groups, induction and restriction of class functions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chartab import CharTable, ClassFunction, abelian_char_table
from .exact import CycNumber, euler_phi


@dataclass(frozen=True, eq=False)
class SubgroupEmbedding:
    """A subgroup H <= G given by element indices of G's Cayley table.

    ``sub_classes[i]`` is the class (in ``sub``) of ambient element
    ``elements[i]``.  Closure, class consistency and the fusion map are checked
    on construction.
    """

    ambient: CharTable
    elements: tuple[int, ...]
    sub: CharTable
    sub_classes: tuple[int, ...]

    def __post_init__(self):
        G = self.ambient
        if G.cayley is None:
            raise ValueError(f"table {G.name} has no Cayley table; induction needs one")
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "sub_classes", tuple(self.sub_classes))
        S = set(elems)
        if G.identity_element() not in S:
            raise ValueError("subgroup does not contain the identity")
        if any(G.cayley[a][b] not in S for a in elems for b in elems):
            raise ValueError("subset is not closed under multiplication")
        if any(G.inverse_element(a) not in S for a in elems):
            raise ValueError("subset is not closed under inverses")
        if len(elems) != self.sub.order or len(self.sub_classes) != len(elems):
            raise ValueError("subgroup table order does not match the element subset")
        counts = [0] * self.sub.nclasses
        for c in self.sub_classes:
            counts[c] += 1
        if counts != list(self.sub.sizes):
            raise ValueError("sub_classes do not match the subgroup class sizes")
        fusion: dict[int, int] = {}
        for g, c in zip(elems, self.sub_classes):
            if fusion.setdefault(c, G.element_classes[g]) != G.element_classes[g]:
                raise ValueError("a subgroup class meets two ambient classes")
        object.__setattr__(self, "fusion", tuple(fusion[c] for c in range(self.sub.nclasses)))
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(elems)})

    @property
    def index(self) -> int:
        return self.ambient.order // self.sub.order


def trivial_subgroup(G: CharTable) -> SubgroupEmbedding:
    return SubgroupEmbedding(G, (G.identity_element(),), abelian_char_table([]), (0,))


def cyclic_subgroup(G: CharTable, generator: int) -> SubgroupEmbedding:
    """<g> with the C_m table; g^i lies in class i."""
    e = G.identity_element()
    powers = [e]
    p = generator
    while p != e:
        powers.append(p)
        p = G.cayley[p][generator]
    return SubgroupEmbedding(G, tuple(powers), abelian_char_table([len(powers)]), tuple(range(len(powers))))


def _lift(v: CycNumber, e: int) -> CycNumber:
    """Embed Q(zeta_m) into Q(zeta_e) for m | e."""
    if v.order == e:
        return v
    if e % v.order:
        raise ValueError(f"cannot embed order {v.order} into order {e}")
    step = e // v.order
    terms = {i * step: c for i, c in enumerate(v.coeffs) if c}
    return CycNumber.from_powers_sparse(e, terms)


def _descend(v: CycNumber, m: int) -> CycNumber:
    """Inverse of _lift; v must lie in Q(zeta_m)."""
    if v.order == m:
        return v
    basis = [_lift(CycNumber.zeta(m, i), v.order) for i in range(euler_phi(m))]
    rows, cols = len(v.coeffs), len(basis)
    A = [[Fraction(basis[j].coeffs[r]) for j in range(cols)] + [Fraction(v.coeffs[r])] for r in range(rows)]
    piv, r = [], 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        A[r] = [x / A[r][c] for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                A[i] = [x - A[i][c] * y for x, y in zip(A[i], A[r])]
        piv.append(c)
        r += 1
    if any(A[i][cols] != 0 for i in range(r, rows)):
        raise ValueError(f"{v} does not lie in Q(zeta_{m})")
    sol = [Fraction(0)] * cols
    for i, c in enumerate(piv):
        sol[c] = A[i][cols]
    out = CycNumber(m, sol)
    assert _lift(out, v.order) == v
    return out


def induce(H: SubgroupEmbedding, f: ClassFunction) -> ClassFunction:
    """Ind_H^G f(g) = (1/|H|) sum over x in G with x^-1 g x in H of f(x^-1 g x)."""
    if f.table is not H.sub:
        raise ValueError("class function is not defined on the embedded subgroup")
    G = H.ambient
    e = G.exponent
    vals = []
    for c in range(G.nclasses):
        g = G.class_rep_element(c)
        acc = CycNumber.rational(e, 0)
        for x in range(G.order):
            y = G.cayley[G.cayley[G.inverse_element(x)][g]][x]
            i = H._index.get(y)
            if i is not None:
                acc = acc + _lift(f.values[H.sub_classes[i]], e)
        vals.append(acc / H.sub.order)
    return ClassFunction(G, tuple(vals))


def restrict(H: SubgroupEmbedding, x: ClassFunction) -> ClassFunction:
    if x.table is not H.ambient:
        raise ValueError("class function is not defined on the ambient group")
    m = H.sub.exponent
    return ClassFunction(H.sub, tuple(_descend(x.values[H.fusion[c]], m) for c in range(H.sub.nclasses)))


def subgroup_from_elements(G: CharTable, elements: Sequence[int], sub: CharTable,
                           sub_classes: Sequence[int]) -> SubgroupEmbedding:
    return SubgroupEmbedding(G, tuple(elements), sub, tuple(sub_classes))
