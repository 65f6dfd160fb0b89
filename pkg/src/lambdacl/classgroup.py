"""Hom-description model of a locally free classgroup and the symmetric-power action on it.

An element of H is an integer matrix F with one column of C-coordinates per
irreducible character, i.e. a homomorphism f from the character ring to C.
H consists of those f with f o gamma = phi_C o f, where gamma is the Galois
permutation of irreducibles induced by psi^q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .chartab import CharTable
from .lambda_ops import adams_matrix, adjoint_matrix, pullback_matrix
from .lattice import (AbGroup, GroupHom, HomGroup, Matrix, Quotient, Subquotient, columns_to_matrix,
                      equivariant_hom_group, hom_group, kernel, matmul, quotient, subgroup)
from .report import Check, CheckList

ANCHOR_CNT = "sigma^k acts on Cl as precomposition with the k'-th power pullback (kk' = 1 mod e(G))"
ANCHOR_PERIOD = "sigma^(k+e(G)) = sigma^k on Cl"
ANCHOR_LINEAR = "sigma^k is additive on Cl"
ANCHOR_UNRAM = "sigma^k(cl h) = k' cl(h) = cl(k' h) for unramified classes"


def _inverse_mod(k: int, e: int) -> int:
    return pow(k, -1, e) if e > 1 else 1


def _is_permutation(m: Matrix) -> bool:
    n = len(m)
    return all(sorted(r) == [0] * (n - 1) + [1] for r in m) and \
        all(sorted(m[i][j] for i in range(n)) == [0] * (n - 1) + [1] for j in range(n))


@dataclass(eq=False)
class ClassgroupModel:
    table: CharTable
    q: int
    C: AbGroup
    phi: GroupHom
    galois: Matrix          # psi^q as a permutation matrix on irreducibles
    hom: HomGroup

    @property
    def H(self) -> AbGroup:
        return self.hom.group

    def element_matrix(self, z: Sequence[int]) -> list[list[int]]:
        """C-coordinate matrix (rows: C generators, columns: irreducibles) of H element z."""
        return self.hom.to_matrix(z)

    def coords(self, F: Sequence[Sequence[int]]) -> tuple[int, ...]:
        return self.hom.coords(F)

    def is_equivariant(self, F: Sequence[Sequence[int]]) -> bool:
        lhs = matmul([list(r) for r in F], self.galois)
        rhs = matmul([list(r) for r in self.phi.matrix], [list(r) for r in F])
        return all(self.C.is_zero([lhs[i][a] - rhs[i][a] for i in range(self.C.ngens)])
                   for a in range(self.table.rank))

    def generator_matrices(self) -> list[list[list[int]]]:
        n = self.H.ngens
        return [self.element_matrix([int(i == j) for j in range(n)]) for i in range(n)]


def build_classgroup(table: CharTable, q: int, C: AbGroup, phi: GroupHom | Matrix | None = None) -> ClassgroupModel:
    if q < 1 or math.gcd(q, table.order) != 1:
        raise ValueError(f"q={q} is not coprime to |G|={table.order}")
    if phi is None:
        phi = GroupHom.identity(C)
    elif not isinstance(phi, GroupHom):
        phi = GroupHom(C, C, phi)
    if phi.source != C or phi.target != C:
        raise ValueError("phi_C must be an endomorphism of C")
    gal = adams_matrix(table, q).as_lists()
    if not _is_permutation(gal):
        raise ValueError(f"psi^{q} does not permute the irreducibles of {table.name}")
    hom = equivariant_hom_group(table.rank, gal, C, phi)
    return ClassgroupModel(table, q, C, phi, gal, hom)


def _check_coprime(model: ClassgroupModel, k: int):
    if k < 1 or math.gcd(k, model.table.order) != 1:
        raise ValueError(f"k={k} is not coprime to |G|={model.table.order}")


def _precompose_matrix(model: ClassgroupModel, op: Matrix) -> Matrix:
    """Matrix on H of f -> f o op, with op given in the irreducible basis."""
    cols = []
    for F in model.generator_matrices():
        G = matmul(F, op)
        if not model.is_equivariant(G):
            raise AssertionError("precomposition left the equivariant Hom group")
        cols.append(model.coords(G))
    return columns_to_matrix(cols, model.H.ngens)


def sigma_on_cl(k: int, model: ClassgroupModel, fresh: bool = False) -> Matrix:
    """sigma^k on H as f -> f o (adjoint psi^k); columns are images of H's generators."""
    _check_coprime(model, k)
    return _precompose_matrix(model, adjoint_matrix(model.table, k, fresh=fresh).as_lists())


def reduce_matrix(A: AbGroup, m: Matrix) -> list[list[int]]:
    n = A.ngens
    cols = [A.reduce([m[r][c] for r in range(n)]) for c in range(len(m[0]) if m else 0)]
    return columns_to_matrix(cols, n)


def compose_on(A: AbGroup, a: Matrix, b: Matrix) -> list[list[int]]:
    if A.ngens == 0:
        return []
    return reduce_matrix(A, matmul(a, b))


def apply_on(A: AbGroup, m: Matrix, z: Sequence[int]) -> tuple[int, ...]:
    return A.reduce([sum(m[r][c] * z[c] for c in range(len(z))) for r in range(A.ngens)])


# --- induced subgroup ------------------------------------------------------------

@dataclass(eq=False)
class IndSubgroup:
    model: ClassgroupModel
    C0: list[list[int]]
    generators: list[tuple[int, ...]]   # H coordinates of f_c for the C0 generators
    sub: Subquotient
    quotient: Quotient

    def f_c(self, c: Sequence[int]) -> list[list[int]]:
        t = self.model.table
        return [[t.degree(a) * c[i] for a in range(t.rank)] for i in range(self.model.C.ngens)]


def fixed_subgroup_generators(C: AbGroup, phi: GroupHom) -> list[list[int]]:
    n = C.ngens
    diff = [[phi.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    sq = kernel(diff, C, C)
    return [C.reduce(g) for g in sq.gens]


def ind_subgroup(model: ClassgroupModel, C0: Sequence[Sequence[int]] | None = None) -> IndSubgroup:
    """{f_c : chi -> deg(chi) c, c in C0} inside H, and the quotient H / Ind."""
    C, phi = model.C, model.phi
    if C0 is None:
        C0 = fixed_subgroup_generators(C, phi)
    C0 = [list(C.reduce(c)) for c in C0]
    span = subgroup(C, C0) if C0 else None
    for c in C0:
        if span is None or not span.contains(list(phi(c))):
            raise ValueError(f"C0 is not stable under phi_C: phi({c}) = {list(phi(c))}")
    # f_c lies in H only when phi(c) = c (evaluate equivariance at the trivial character)
    for c in C0:
        if not C.is_zero([a - b for a, b in zip(phi(c), c)]):
            raise ValueError(f"f_c is not Galois equivariant for c={c}: phi_C does not fix it")
    ind = IndSubgroup(model, C0, [], None, None)
    gens = [model.coords(ind.f_c(c)) for c in C0]
    ind.generators = gens
    H = model.H
    ind.sub = subgroup(H, gens) if gens else subgroup(H, [H.zero()])
    ind.quotient = quotient(H, gens)
    for k in range(1, max(model.table.exponent, 2) + 1):
        if math.gcd(k, model.table.order) == 1:
            sig = sigma_on_cl(k, model)
            for z in gens:
                if apply_on(H, sig, z) != H.reduce(z):
                    raise AssertionError(f"sigma^{k} moves the induced class {z}")
    return ind


def sigma_on_quotient(ind: IndSubgroup, k: int) -> Matrix:
    """The action of sigma^k on H/Ind, computed through lifts of the quotient generators."""
    Q = ind.quotient
    sig = sigma_on_cl(k, ind.model)
    cols = [Q.project(apply_on(ind.model.H, sig, g)) for g in Q._sq.gens]
    return columns_to_matrix(cols, Q.group.ngens)


# --- verifiers -------------------------------------------------------------------

def verify_cnt_duality(model: ClassgroupModel, k: int) -> CheckList:
    _check_coprime(model, k)
    t, H = model.table, model.H
    e = t.exponent
    tag = f"{t.name}/q={model.q}/C={model.C}/k={k}"
    out = CheckList()
    sig = reduce_matrix(H, sigma_on_cl(k, model)) if H.ngens else []
    if t.is_abelian():
        kp = _inverse_mod(k, e)
        pull = reduce_matrix(H, _precompose_matrix(model, pullback_matrix(t, kp).as_lists())) if H.ngens else []
        out.add(Check(f"cnt-duality/{tag}/pullback", ANCHOR_CNT, {"table": t.name, "k": k, "k_prime": kp},
                      pull, sig))
    shifted = reduce_matrix(H, sigma_on_cl(k + e, model, fresh=True)) if H.ngens else []
    out.add(Check(f"cnt-duality/{tag}/period", ANCHOR_PERIOD, {"table": t.name, "k": k, "e": e}, sig, shifted))
    gens = [tuple(int(i == j) for j in range(H.ngens)) for i in range(H.ngens)]
    lhs, rhs = [], []
    for a in gens:
        for b in gens:
            s = H.reduce([x + y for x, y in zip(a, b)])
            lhs.append(apply_on(H, sig, s))
            rhs.append(H.reduce([x + y for x, y in zip(apply_on(H, sig, a), apply_on(H, sig, b))]))
    out.add(Check(f"cnt-duality/{tag}/additive", ANCHOR_LINEAR, {"table": t.name, "k": k}, rhs, lhs))
    return out


@dataclass(eq=False)
class H1Model:
    """Hom(G^, C) for an abelian table, stored as images of the dual generators."""

    table: CharTable
    C: AbGroup
    hom: HomGroup

    @property
    def group(self) -> AbGroup:
        return self.hom.group

    def images(self, z: Sequence[int]) -> list[tuple[int, ...]]:
        M = self.hom.to_matrix(z)
        return [tuple(M[i][g] for i in range(self.C.ngens)) for g in range(self.hom.source.ngens)]

    def element(self, images: Sequence[Sequence[int]]) -> tuple[int, ...]:
        """Coordinates of the h sending dual generator g to images[g]; checks the order relations."""
        F = columns_to_matrix([self.C.reduce(v) for v in images], self.C.ngens)
        if not self.hom.contains(F):
            raise ValueError("images do not respect the orders of the dual generators")
        return self.hom.coords(F)

    def generators(self) -> list[tuple[int, ...]]:
        n = self.group.ngens
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def h1_model(table: CharTable, C: AbGroup) -> H1Model:
    if table.abelian_invariants is None:
        raise ValueError(f"{table.name} has no abelian presentation")
    return H1Model(table, C, hom_group(AbGroup(table.abelian_invariants), C))


def h1_class_map(h: Sequence[int], h1: H1Model, model: ClassgroupModel) -> tuple[int, ...]:
    """cl(h): chi_a -> h(a), extended linearly to the character ring."""
    if h1.table is not model.table:
        raise ValueError("H1 model and classgroup model use different tables")
    if model.q != 1:
        raise ValueError("the unramified class map needs the trivial Galois action (q = 1)")
    imgs = h1.images(h)
    cols = []
    for label in model.table.element_labels:
        v = [0] * model.C.ngens
        for a, img in zip(label, imgs):
            v = [x + a * y for x, y in zip(v, img)]
        cols.append(model.C.reduce(v))
    F = columns_to_matrix(cols, model.C.ngens)
    if not model.hom.contains(F):
        raise ValueError("cl(h) is not in H; phi_C must fix the image of h")
    return model.coords(F)


def verify_unramified_formula(h: Sequence[int], k: int, h1: H1Model, model: ClassgroupModel) -> CheckList:
    """sigma^k(cl h), k' cl(h) and cl(k' h) computed along separate paths and compared in H."""
    _check_coprime(model, k)
    H = model.H
    kp = _inverse_mod(k, model.table.exponent)
    cl_h = h1_class_map(h, h1, model)
    F = model.element_matrix(cl_h)
    direct = model.coords(matmul(F, adjoint_matrix(model.table, k).as_lists()))
    via_matrix = apply_on(H, sigma_on_cl(k, model), cl_h)
    scaled = H.reduce([kp * x for x in cl_h])
    twisted = h1_class_map(h1.group.reduce([kp * x for x in h]), h1, model)
    tag = f"{model.table.name}/C={model.C}/k={k}/h={','.join(map(str, h))}"
    inputs = {"table": model.table.name, "C": str(model.C), "k": k, "k_prime": kp, "h": list(h)}
    out = CheckList()
    out.add(Check(f"unramified/{tag}/scalar", ANCHOR_UNRAM, inputs, scaled, direct))
    out.add(Check(f"unramified/{tag}/twist", ANCHOR_UNRAM, inputs, twisted, direct))
    out.add(Check(f"unramified/{tag}/matrix", ANCHOR_UNRAM, inputs, direct, via_matrix))
    return out
