"""A totally tamely ramified cyclic Kummer cover F_q[[t]] / F_q[[s]], s = t^e.

G = <g> of order e acts by g(t) = zeta t.  Torsion classes are integer vectors
over the characters chi^0..chi^(e-1), where chi(g) = zeta is the action on the
class of t.  The resolvent class is obtained by building the map

    t^a (x) b  ->  sum_m  t^a g^m(b) (x) [g^-m]

on O_Y-bases, finding the s-valuation of its determinant, and decomposing the
cokernel of its reduction mod s^N under G by linear algebra over F_q.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf import GF, field as gf_field, rank, reduce_against, rref
from .report import Check, CheckList

ANCHOR_CHASE = "resolvent class of P^j = sum_{i=1}^{e-1} i chi^(j+i)"
ANCHOR_DIFF = "resolvent class of P^j = sum_i [P^(j-i(e-1)) / P^j] modulo Ind from the trivial group"
ANCHOR_DIM = "dim coker = v_s(det) of the resolvent matrix"
ANCHOR_TRUNC = "resolvent class is independent of the truncation order N' >= v_s(det)"


@dataclass(frozen=True, eq=False)
class Cover:
    q: int
    e: int
    zeta: int
    F: GF = field(repr=False)

    @property
    def different_exponent(self) -> int:
        return self.e - 1

    def zeta_power(self, m: int) -> int:
        return self.F.pow(self.zeta, m % self.e)

    def regular(self) -> "TorsionClass":
        return TorsionClass(self, (1,) * self.e)

    def zero(self) -> "TorsionClass":
        return TorsionClass(self, (0,) * self.e)

    def chi(self, m: int) -> "TorsionClass":
        v = [0] * self.e
        v[m % self.e] = 1
        return TorsionClass(self, tuple(v))


def setup_cover(q: int, e: int, zeta: int | None = None) -> Cover:
    F = gf_field(q)
    if e < 1 or (q - 1) % e:
        raise ValueError(f"e={e} does not divide q-1={q - 1}")
    if zeta is None:
        zeta = next(a for a in range(1, q) if F.order(a) == e)
    elif not 0 < zeta < q or F.order(zeta) != e:
        raise ValueError(f"zeta={zeta} does not have exact order {e} in GF({q})")
    return Cover(q, e, zeta, F)


@dataclass(frozen=True)
class TorsionClass:
    cover: Cover = field(compare=False, repr=False)
    multiplicities: tuple[int, ...]

    def __add__(self, other: "TorsionClass") -> "TorsionClass":
        return TorsionClass(self.cover, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities)))

    def __sub__(self, other: "TorsionClass") -> "TorsionClass":
        return TorsionClass(self.cover, tuple(a - b for a, b in zip(self.multiplicities, other.multiplicities)))

    def __rmul__(self, c: int) -> "TorsionClass":
        return TorsionClass(self.cover, tuple(c * a for a in self.multiplicities))

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    def regular_multiple(self) -> int | None:
        """c if this class is c * r_G, else None."""
        m = self.multiplicities
        return m[0] if len(set(m)) <= 1 and m else (0 if not m else None)

    def as_list(self) -> list[int]:
        return list(self.multiplicities)


def fractional_quotient_class(cover: Cover, a: int, b: int) -> TorsionClass:
    """Class of P^a / P^b: the monomial t^m has weight chi^m."""
    if a > b:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    v = [0] * cover.e
    for m in range(a, b):
        v[m % cover.e] += 1
    return TorsionClass(cover, tuple(v))


def reduce_mod_ind(c: TorsionClass) -> TorsionClass:
    """Subtract (min multiplicity) * r_G."""
    if not c.multiplicities:
        return c
    lo = min(c.multiplicities)
    return TorsionClass(c.cover, tuple(x - lo for x in c.multiplicities))


# --- the resolvent map ---------------------------------------------------------------

@dataclass(eq=False)
class PolyMatrix:
    """Square matrix over F_q[s]; ``entries[r, c, d]`` is the s^d coefficient.

    G-action of the generator: source basis vector c is scaled by ``source_scalars[c]``,
    target basis vector r is sent to target basis vector ``target_perm[r]``.
    """

    F: GF
    entries: np.ndarray
    source_scalars: np.ndarray
    target_perm: np.ndarray

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def degree_bound(self) -> int:
        """Sum over columns of the largest s-degree; bounds deg det."""
        nz = self.entries != 0
        total = 0
        for c in range(self.size):
            ds = np.nonzero(nz[:, c, :].any(axis=0))[0]
            total += int(ds.max()) if ds.size else 0
        return total

    def is_equivariant(self) -> bool:
        # A(g v) = g(A v): scaling column c of A must equal permuting its rows
        F = self.F
        scaled = F.mul(self.entries, self.source_scalars[None, :, None])
        permuted = np.zeros_like(self.entries)
        permuted[self.target_perm] = self.entries
        return bool(np.array_equal(scaled, permuted))


def _target_index(e: int, c: int, h: int) -> int:
    return c * e + h


def resolvent_matrix(cover: Cover, j: int) -> PolyMatrix:
    """Source basis t^alpha (x) t^(j+beta); target basis t^(j+c) (x) [g^h]."""
    e, F = cover.e, cover.F
    n = e * e
    A = np.zeros((n, n, 2), dtype=np.int64)
    scal = np.zeros(n, dtype=np.int64)
    for alpha in range(e):
        for beta in range(e):
            col = alpha * e + beta
            scal[col] = cover.zeta_power(j + beta)
            delta, c = divmod(alpha + beta, e)
            for m in range(e):
                row = _target_index(e, c, (-m) % e)
                A[row, col, delta] = F.add(A[row, col, delta], cover.zeta_power(m * (j + beta)))
    perm = np.array([_target_index(e, r // e, (r % e + 1) % e) for r in range(n)], dtype=np.int64)
    M = PolyMatrix(F, A, scal, perm)
    if not M.is_equivariant():
        raise AssertionError("resolvent matrix is not G-equivariant")
    return M


# --- determinant valuation over F_q[[s]] ---------------------------------------------

def _series_inverse(F: GF, u: np.ndarray) -> np.ndarray:
    P = u.shape[0]
    out = np.zeros(P, dtype=np.int64)
    inv0 = int(F.inv(int(u[0])))
    out[0] = inv0
    for k in range(1, P):
        acc = 0
        for i in range(1, k + 1):
            acc = F.add(acc, F.mul(int(u[i]), int(out[k - i])))
        out[k] = F.mul(F.neg(acc), inv0)
    return out


def _series_mul_rows(F: GF, c: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """c[r, :] * rows[:, :] truncated, for each r: returns shape (len(c), ncols, P)."""
    P = rows.shape[-1]
    out = np.zeros((c.shape[0],) + rows.shape, dtype=np.int64)
    for i in range(P):
        ci = c[:, i]
        if ci.any():
            out[:, :, i:] = F.add(out[:, :, i:], F.mul(ci[:, None, None], rows[None, :, :P - i]))
    return out


def det_valuation(M: PolyMatrix) -> int:
    """v_s(det M), by elimination over F_q[[s]] with globally minimal-valuation pivots.

    Entries are kept mod s^P with P = deg bound + 1.  Choosing the pivot of least
    valuation keeps every later entry exact mod s^P, and any nonzero determinant
    has valuation < P, so a block that vanishes mod s^P means det = 0.
    """
    F = M.F
    n = M.size
    P = M.degree_bound() + 1
    A = np.zeros((n, n, P), dtype=np.int64)
    d = min(P, M.entries.shape[2])
    A[:, :, :d] = M.entries[:, :, :d]
    total = 0
    while A.shape[0]:
        nz = A != 0
        val = np.where(nz.any(axis=2), nz.argmax(axis=2), P)
        v = int(val.min())
        if v >= P:
            raise ArithmeticError("resolvent determinant vanishes")
        r, c = map(int, np.argwhere(val == v)[0])
        total += v
        # scale the pivot row so the pivot is exactly s^v
        unit = np.zeros(P, dtype=np.int64)
        unit[:P - v] = A[r, c, v:]
        A[r] = _series_mul_rows(F, _series_inverse(F, unit)[None, :], A[r])[0]
        others = [i for i in range(A.shape[0]) if i != r]
        if others:
            quot = np.zeros((len(others), P), dtype=np.int64)
            quot[:, :P - v] = A[others, c, v:]
            A[others] = F.sub(A[others], _series_mul_rows(F, quot, A[r]))
            assert not A[others, c].any()
        keep_c = [k for k in range(A.shape[1]) if k != c]
        A = A[others][:, keep_c]
    return total


# --- cokernel as a G-representation --------------------------------------------------

@dataclass
class ResolventResult:
    cover: Cover
    j: int
    det_valuation: int
    truncation: int
    cokernel_dim: int
    torsion_class: TorsionClass


def _cokernel_class(M: PolyMatrix, cover: Cover, N: int) -> tuple[int, TorsionClass]:
    """Cokernel of M mod s^N on the e^2 N dimensional truncation, with its G-character."""
    F, n, e = M.F, M.size, cover.e
    D = n * N
    # coordinates: target row r, power k  ->  r * N + k
    gens = np.zeros((n * N, D), dtype=np.int64)
    deg = M.entries.shape[2]
    for col in range(n):
        for shift in range(N):
            g = gens[col * N + shift]
            for d in range(deg):
                if shift + d < N:
                    g[np.arange(n) * N + shift + d] = M.entries[:, col, d]
    R, piv = rref(F, gens)
    free = [i for i in range(D) if i not in set(piv)]
    dq = len(free)
    if dq == 0:
        return 0, cover.zero()
    # image of each quotient basis vector under g, reduced back into the quotient
    images = np.zeros((dq, D), dtype=np.int64)
    for i, c in enumerate(free):
        r, k = divmod(c, N)
        images[i, int(M.target_perm[r]) * N + k] = 1
    red = reduce_against(F, R, piv, images)
    act = red[:, free]          # row i = coordinates of g(basis_i)
    mult = []
    for m in range(e):
        lam = cover.zeta_power(m)
        shifted = act.copy()
        idx = np.arange(dq)
        shifted[idx, idx] = F.sub(shifted[idx, idx], lam)
        mult.append(dq - rank(F, shifted))
    if sum(mult) != dq:
        raise AssertionError("G-action on the cokernel is not diagonalisable")
    _check_traces(F, cover, act, mult)
    return dq, TorsionClass(cover, tuple(mult))


def _check_traces(F: GF, cover: Cover, act: np.ndarray, mult: list[int]):
    # tr(g^h) on the quotient vs sum_m mult_m zeta^(mh), both in F_q
    power = np.eye(act.shape[0], dtype=np.int64)
    for h in range(cover.e):
        tr = 0
        for x in np.diagonal(power):
            tr = F.add(tr, int(x))
        expect = 0
        for m, c in enumerate(mult):
            expect = F.add(expect, F.mul(F.from_int(c), cover.zeta_power(m * h)))
        if int(tr) != int(expect):
            raise AssertionError(f"trace of g^{h} disagrees with the eigenspace decomposition")
        power = _matmul(F, power, act)


def _matmul(F: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.prime:
        return (a @ b) % F.q
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = F.add(out, F.mul(a[:, k][:, None], b[k][None, :]))
    return out


def resolvent_cokernel(cover: Cover, j: int, extra: int = 0) -> ResolventResult:
    """Resolvent cokernel truncated at N = v_s(det) + extra."""
    M = resolvent_matrix(cover, j)
    v = det_valuation(M)
    N = v + extra
    dim, cls = _cokernel_class(M, cover, N) if N > 0 else (0, cover.zero())
    return ResolventResult(cover, j, v, N, dim, cls)


def resolvent_class(cover: Cover, j: int) -> TorsionClass:
    return resolvent_cokernel(cover, j).torsion_class


# --- identity checks -----------------------------------------------------------------

def chase_rhs(cover: Cover, j: int) -> TorsionClass:
    out = cover.zero()
    for i in range(1, cover.e):
        out = out + i * cover.chi(j + i)
    return out


def different_sum(cover: Cover, j: int) -> TorsionClass:
    """sum_{i=1}^{e-1} [P^(j - i(e-1)) / P^j]."""
    out = cover.zero()
    for i in range(1, cover.e):
        out = out + fractional_quotient_class(cover, j - i * (cover.e - 1), j)
    return out


def _tag(cover: Cover, j: int) -> str:
    return f"q={cover.q}/e={cover.e}/j={j:+d}"


def check_chase_identity(cover: Cover, j: int, result: ResolventResult | None = None) -> CheckList:
    res = result or resolvent_cokernel(cover, j)
    inputs = {"q": cover.q, "e": cover.e, "j": j, "zeta": cover.zeta, "det_valuation": res.det_valuation}
    out = CheckList()
    out.add(Check(f"local-cover/{_tag(cover, j)}/chase", ANCHOR_CHASE, inputs,
                  chase_rhs(cover, j).as_list(), res.torsion_class.as_list()))
    return out


def check_different_identity(cover: Cover, j: int, result: ResolventResult | None = None) -> CheckList:
    if j > 0:
        raise ValueError(f"the different identity is checked for j <= 0, got j={j}")
    res = result or resolvent_cokernel(cover, j)
    rhs = different_sum(cover, j)
    diff = rhs - res.torsion_class
    inputs = {"q": cover.q, "e": cover.e, "j": j, "lhs": res.torsion_class.as_list(), "rhs": rhs.as_list()}
    out = CheckList()
    # the difference must be c * r_G; compare it against its own reduction to 0
    out.add(Check(f"local-cover/{_tag(cover, j)}/different", ANCHOR_DIFF, inputs,
                  cover.zero().as_list(), reduce_mod_ind(diff).as_list()))
    return out


def check_resolvent_structure(cover: Cover, j: int, result: ResolventResult | None = None) -> CheckList:
    """dim coker = v_s(det), and the class is unchanged at truncation N + 2."""
    res = result or resolvent_cokernel(cover, j)
    longer = resolvent_cokernel(cover, j, extra=2)
    inputs = {"q": cover.q, "e": cover.e, "j": j, "N": res.truncation}
    out = CheckList()
    out.add(Check(f"local-cover/{_tag(cover, j)}/dimension", ANCHOR_DIM, inputs,
                  res.det_valuation, res.cokernel_dim))
    out.add(Check(f"local-cover/{_tag(cover, j)}/truncation", ANCHOR_TRUNC, inputs,
                  res.torsion_class.as_list(), longer.torsion_class.as_list()))
    return out
