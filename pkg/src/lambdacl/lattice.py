"""Integer lattices and finitely generated abelian groups.

Every group here is a diagonal presentation ``Z/o_1 + ... + Z/o_r`` (``o_i = 0``
meaning a free summand); elements are integer tuples reduced componentwise.
Subgroups, kernels, quotients and Hom groups are all computed through the Smith
normal form and handed back as :class:`Subquotient` objects that remember how
their generators sit inside the ambient coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

Matrix = list[list[int]]


# --- small matrix helpers ----------------------------------------------------

def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    if len(a[0]) != inner:
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {inner}x{cols}")
    bt = list(zip(*b)) if b else [()] * cols
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(r) for r in zip(*a)]


def columns_to_matrix(cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
    return [[c[i] for c in cols] for i in range(nrows)]


def det(a: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# --- Smith normal form -------------------------------------------------------

@dataclass
class _SNF:
    U: Matrix
    Uinv: Matrix
    D: Matrix
    V: Matrix
    Vinv: Matrix
    rank: int

    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def _snf(M: Matrix, ncols: int | None = None) -> _SNF:
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    A = [list(map(int, r)) for r in M]
    U, Uinv, V, Vinv = identity(m), identity(m), identity(n), identity(n)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for r in Uinv:
                r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        if i != j:
            for r in A:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        if c:
            A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
            U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]
            for r in Uinv:
                r[src] -= c * r[dst]

    def add_col(dst, src, c):
        if c:
            for r in A:
                r[dst] += c * r[src]
            for r in V:
                r[dst] += c * r[src]
            Vinv[src] = [x - c * y for x, y in zip(Vinv[src], Vinv[dst])]

    def neg_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    t = 0
    while t < min(m, n):
        # smallest nonzero |entry| in the trailing block, row-major tie-break
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, n):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            neg_row(t)
        t += 1
    return _SNF(U, Uinv, A, V, Vinv, t)


def smith_normal_form(M: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*M*V = D diagonal, d_1 | d_2 | ..., U and V unimodular.

    ``ncols`` is only needed for a matrix with zero rows.
    """
    s = _snf(M, ncols)
    return s.U, s.D, s.V


def invariant_factors(M: Matrix, ncols: int | None = None) -> list[int]:
    """Diagonal of the Smith form, padded with zeros to min(rows, cols)."""
    return _snf(M, ncols).diagonal()


# --- lattices inside Z^m -----------------------------------------------------

class LatticeSolver:
    """The sublattice of Z^dim spanned by some generator vectors.

    ``basis`` is a Z-basis; ``solve(v)`` returns the coordinates of v in that
    basis or None when v is not in the lattice.
    """

    def __init__(self, gens: Sequence[Sequence[int]], dim: int):
        self.dim = dim
        gens = [list(g) for g in gens if any(g)]
        if not gens:
            self.rank, self.basis, self._U, self._d = 0, [], identity(dim), []
            return
        s = _snf(columns_to_matrix(gens, dim))
        self.rank = s.rank
        self._U = s.U
        self._d = s.diagonal()[: s.rank]
        # G V = Uinv D, so column i of Uinv scaled by d_i is a basis vector
        self.basis = [[s.Uinv[r][i] * self._d[i] for r in range(dim)] for i in range(s.rank)]

    def solve(self, v: Sequence[int]) -> list[int] | None:
        w = matvec(self._U, v)
        if any(w[self.rank:]):
            return None
        out = []
        for wi, di in zip(w, self._d):
            if wi % di:
                return None
            out.append(wi // di)
        return out

    def contains(self, v: Sequence[int]) -> bool:
        return self.solve(v) is not None

    def contains_lattice(self, other: "LatticeSolver") -> bool:
        return all(self.contains(b) for b in other.basis)


def integer_kernel(M: Matrix, ncols: int) -> list[list[int]]:
    """Z-basis of {x in Z^ncols : M x = 0}."""
    if not M:
        return [list(r) for r in identity(ncols)]
    s = _snf(M)
    return [[s.V[r][i] for r in range(ncols)] for i in range(s.rank, ncols)]


# --- abelian groups ----------------------------------------------------------

@dataclass(frozen=True)
class AbGroup:
    """Diagonal presentation Z/o_1 + ... + Z/o_r; o_i = 0 is a free summand."""

    orders: tuple[int, ...]

    def __post_init__(self):
        o = tuple(int(x) for x in self.orders)
        if any(x < 0 for x in o):
            raise ValueError(f"orders must be >= 0: {o}")
        object.__setattr__(self, "orders", o)

    @classmethod
    def parse(cls, text: str) -> "AbGroup":
        """'4,0' -> Z/4 + Z.  The empty string (or '1') is the trivial group."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad abelian group spec {text!r}: {exc}") from None

    def __str__(self):
        return ",".join(str(o) for o in self.orders)

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != len(self.orders):
            raise ValueError(f"element {tuple(v)} has wrong length for group ({self})")
        return tuple(x % o if o else int(x) for x, o in zip(v, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def relations(self) -> list[list[int]]:
        """Relation vectors (one per nonzero order) as columns."""
        n = len(self.orders)
        return [[o if r == i else 0 for r in range(n)] for i, o in enumerate(self.orders) if o]

    @property
    def invariants(self) -> tuple[int, ...]:
        """Invariant factors d_1 | d_2 | ..., units dropped, 0 for free parts."""
        n = len(self.orders)
        d = invariant_factors([[self.orders[i] if i == j else 0 for j in range(n)] for i in range(n)], n)
        return tuple(x for x in d if x != 1)

    def is_finite(self) -> bool:
        return all(self.orders)

    def order(self) -> int | None:
        return math.prod(self.orders) if self.is_finite() else None

    def is_trivial(self) -> bool:
        return all(o == 1 for o in self.orders)

    def isomorphic(self, other: "AbGroup") -> bool:
        return self.invariants == other.invariants

    def elements(self) -> Iterable[tuple[int, ...]]:
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite group")
        import itertools
        return itertools.product(*(range(o) for o in self.orders))

    def is_zero(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))


def trivial_group() -> AbGroup:
    return AbGroup(())


@dataclass(frozen=True, eq=False)
class GroupHom:
    """Homomorphism given by an integer matrix on generator coordinates."""

    source: AbGroup
    target: AbGroup
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(mat) != self.target.ngens or any(len(r) != self.source.ngens for r in mat):
            raise ValueError(f"matrix shape does not match {self.source} -> {self.target}")
        object.__setattr__(self, "matrix", mat)
        for i, o in enumerate(self.source.orders):
            col = [mat[r][i] * o for r in range(self.target.ngens)]
            if not self.target.is_zero(col):
                raise ValueError(f"matrix does not respect the relation of source generator {i} (order {o})")

    @classmethod
    def identity(cls, A: AbGroup) -> "GroupHom":
        return cls(A, A, identity(A.ngens))

    @classmethod
    def scalar(cls, A: AbGroup, c: int) -> "GroupHom":
        return cls(A, A, [[c * int(i == j) for j in range(A.ngens)] for i in range(A.ngens)])

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(matvec([list(r) for r in self.matrix], v))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.target.reduce([r[i] for r in self.matrix]) for i in range(self.source.ngens)]

    def __eq__(self, other):
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.columns() == other.columns())

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.columns())))

    def __add__(self, other: "GroupHom") -> "GroupHom":
        return GroupHom(self.source, self.target,
                        [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __rmul__(self, c: int) -> "GroupHom":
        return GroupHom(self.source, self.target, [[c * a for a in r] for r in self.matrix])

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner."""
        if inner.target != self.source:
            raise ValueError("composition of incompatible homomorphisms")
        return GroupHom(inner.source, self.target,
                        matmul([list(r) for r in self.matrix], [list(r) for r in inner.matrix]))

    def is_endomorphism(self) -> bool:
        return self.source == self.target


# --- subquotients ------------------------------------------------------------

@dataclass
class Subquotient:
    """(span K + span R) / span R for integer vectors K, R in Z^dim.

    ``group`` is the result in Smith form (trivial factors dropped); ``gens``
    are ambient representatives of its generators.
    """

    group: AbGroup
    gens: list[list[int]]
    dim: int
    _solver: LatticeSolver = field(repr=False)
    _P: Matrix = field(repr=False)
    _keep: list[int] = field(repr=False)

    def coords(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of an ambient vector lying in the numerator lattice."""
        y = self._solver.solve(v)
        if y is None:
            raise ValueError(f"vector {list(v)} is not in the subgroup")
        z = matvec(self._P, y)
        return self.group.reduce([z[i] for i in self._keep])

    def contains(self, v: Sequence[int]) -> bool:
        return self._solver.contains(v)

    def element(self, z: Sequence[int]) -> list[int]:
        """Ambient representative of the element with coordinates z."""
        out = [0] * self.dim
        for c, g in zip(z, self.gens):
            if c:
                out = [a + c * b for a, b in zip(out, g)]
        return out

    def matrix_of(self, fn: Callable[[list[int]], Sequence[int]]) -> Matrix:
        """Matrix of an endomorphism given on ambient vectors (must preserve the subquotient)."""
        cols = [self.coords(fn(g)) for g in self.gens]
        return columns_to_matrix(cols, self.group.ngens)


def subquotient(K: Sequence[Sequence[int]], R: Sequence[Sequence[int]], dim: int) -> Subquotient:
    solver = LatticeSolver(list(K) + list(R), dim)
    b = solver.rank
    rel_cols = []
    for r in R:
        y = solver.solve(r)
        assert y is not None
        if any(y):
            rel_cols.append(y)
    if rel_cols:
        s = _snf(columns_to_matrix(rel_cols, b))
        diag = s.diagonal()
        orders = [diag[i] if i < s.rank else 0 for i in range(b)]
        P, Pinv = s.U, s.Uinv
    else:
        orders = [0] * b
        P, Pinv = identity(b), identity(b)
    keep = [i for i, o in enumerate(orders) if o != 1]
    gens = []
    for i in keep:
        y = [Pinv[r][i] for r in range(b)]
        v = [0] * dim
        for c, bv in zip(y, solver.basis):
            if c:
                v = [a + c * x for a, x in zip(v, bv)]
        gens.append(v)
    group = AbGroup(tuple(orders[i] for i in keep))
    return Subquotient(group, gens, dim, solver, P, keep)


def kernel(hom_matrix: Matrix, source: AbGroup, target: AbGroup) -> Subquotient:
    """Kernel of the homomorphism source -> target given on generator coordinates."""
    m, p = source.ngens, target.ngens
    rt = target.relations()
    # x with A x in span(rt):  [A | -Rt] (x, y) = 0
    big = [list(hom_matrix[i]) + [-r[i] for r in rt] for i in range(p)]
    null = integer_kernel(big, m + len(rt)) if p else [list(r) for r in identity(m)]
    K = [v[:m] for v in null]
    return subquotient(K, source.relations(), m)


def subgroup(A: AbGroup, gens: Sequence[Sequence[int]]) -> Subquotient:
    for g in gens:
        A.reduce(g)
    return subquotient([list(g) for g in gens], A.relations(), A.ngens)


@dataclass
class Quotient:
    group: AbGroup
    projection: Matrix          # rows: quotient coords, cols: ambient generators
    _sq: Subquotient = field(repr=False)

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.group.reduce(matvec(self.projection, v))


def quotient(A: AbGroup, gens: Sequence[Sequence[int]]) -> Quotient:
    for g in gens:
        A.reduce(g)   # validates the shape
    n = A.ngens
    sq = subquotient(identity(n), A.relations() + [list(g) for g in gens], n)
    proj = columns_to_matrix([sq.coords(e) for e in identity(n)], sq.group.ngens)
    return Quotient(sq.group, proj, sq)


# --- Hom groups ----------------------------------------------------------------

@dataclass
class HomGroup:
    """A group of homomorphisms Z^? -> B realised inside B^(ncols)."""

    group: AbGroup
    source: AbGroup
    target: AbGroup
    sq: Subquotient

    def _vec(self, mat: Sequence[Sequence[int]]) -> list[int]:
        return _hom_vec(mat, self.source.ngens, self.target.ngens)

    def _mat(self, vec: Sequence[int]) -> list[list[int]]:
        return _hom_mat(vec, self.source.ngens, self.target.ngens)

    def to_hom(self, z: Sequence[int]) -> GroupHom:
        return GroupHom(self.source, self.target, self._mat(self.sq.element(z)))

    def to_matrix(self, z: Sequence[int]) -> list[list[int]]:
        """Target-coordinate matrix of the element, columns reduced."""
        mat = self._mat(self.sq.element(z))
        cols = [self.target.reduce([r[i] for r in mat]) for i in range(self.source.ngens)]
        return columns_to_matrix(cols, self.target.ngens)

    def coords(self, mat) -> tuple[int, ...]:
        if isinstance(mat, GroupHom):
            mat = mat.matrix
        return self.sq.coords(self._vec(mat))

    def contains(self, mat) -> bool:
        if isinstance(mat, GroupHom):
            mat = mat.matrix
        return self.sq.contains(self._vec(mat))

    @property
    def generators(self) -> list[GroupHom]:
        return [self.to_hom([int(i == j) for j in range(self.group.ngens)]) for i in range(self.group.ngens)]


def _hom_vec(mat: Sequence[Sequence[int]], ns: int, c: int) -> list[int]:
    # column-major: index i*c + j holds F[j][i]
    return [mat[j][i] for i in range(ns) for j in range(c)]


def _hom_mat(vec: Sequence[int], ns: int, c: int) -> list[list[int]]:
    return [[vec[i * c + j] for i in range(ns)] for j in range(c)]


def _ambient_hom_space(ns: int, B: AbGroup) -> AbGroup:
    return AbGroup(B.orders * ns)


def hom_group(A: AbGroup, B: AbGroup) -> HomGroup:
    """Hom(A, B): matrices F with o_i * F[:, i] = 0 in B for each source order o_i."""
    na, nb = A.ngens, B.ngens
    amb = _ambient_hom_space(na, B)
    dim = na * nb
    # vec index i*nb + j  <->  F[j][i]; the map scales column i by o_i
    scale = [[A.orders[c // nb] if r == c else 0 for c in range(dim)] for r in range(dim)]
    sq = kernel(scale, amb, amb)
    return HomGroup(sq.group, A, B, sq)


def equivariant_hom_group(rank: int, sigma_R: Matrix, C: AbGroup, phi_C: GroupHom) -> HomGroup:
    """{f in Hom(Z^rank, C) : f o sigma_R = phi_C o f}."""
    if len(sigma_R) != rank or any(len(r) != rank for r in sigma_R):
        raise ValueError(f"sigma_R must be {rank}x{rank}")
    if abs(det(sigma_R)) != 1:
        raise ValueError("sigma_R is not invertible over the integers")
    if phi_C.source != C or phi_C.target != C:
        raise ValueError("phi_C must be an endomorphism of C")
    c = C.ngens
    dim = rank * c
    free = AbGroup((0,) * rank)
    amb = _ambient_hom_space(rank, C)
    phi = [list(r) for r in phi_C.matrix]
    cols = []
    for idx in range(dim):
        e = [int(i == idx) for i in range(dim)]
        F = _hom_mat(e, rank, c)
        img = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(matmul(F, sigma_R), matmul(phi, F))]
        cols.append(_hom_vec(img, rank, c))
    delta = columns_to_matrix(cols, dim)
    sq = kernel(delta, amb, amb)
    return HomGroup(sq.group, free, C, sq)


def endomorphism_matrix_is_valid(A: AbGroup, mat: Matrix) -> bool:
    try:
        GroupHom(A, A, mat)
    except ValueError:
        return False
    return True
