"""Adams, symmetric/exterior powers, adjoint Adams and power pullbacks on virtual characters."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .chartab import (CharTable, ClassFunction, VirtualCharacter, IntegralityError, product,
                      to_virtual)
from .lattice import Matrix, matmul, matvec, transpose


@dataclass(frozen=True, eq=False)
class OperationMatrix:
    """Matrix of a linear operation in the irreducible basis; column b = image of chi_b."""

    table: CharTable
    k: int
    kind: str
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, x: VirtualCharacter) -> VirtualCharacter:
        if x.table is not self.table:
            raise ValueError("operation and character live on different tables")
        return VirtualCharacter(self.table, tuple(matvec([list(r) for r in self.matrix], x.coords)))

    def as_lists(self) -> Matrix:
        return [list(r) for r in self.matrix]

    def __eq__(self, other):
        if not isinstance(other, OperationMatrix):
            return NotImplemented
        return self.table is other.table and self.matrix == other.matrix

    def __hash__(self):
        return hash((id(self.table), self.matrix))


def _columns_matrix(table: CharTable, images: list[VirtualCharacter]) -> tuple:
    return tuple(tuple(images[b].coords[a] for b in range(table.rank)) for a in range(table.rank))


def adams_class_function(k: int, x) -> ClassFunction:
    f = x.class_function() if isinstance(x, VirtualCharacter) else x
    return f.compose_power(k)


def adams_matrix(table: CharTable, k: int, fresh: bool = False) -> OperationMatrix:
    """Matrix of psi^k.  Cached by k mod e(G) unless ``fresh`` forces a recomputation from values."""
    if k < 1:
        raise ValueError(f"Adams operations need k >= 1, got {k}")
    key = ("adams", k % table.exponent)
    if fresh or key not in table._cache:
        images = [to_virtual(adams_class_function(k, table.irreducible(b))) for b in range(table.rank)]
        op = OperationMatrix(table, k, "adams", _columns_matrix(table, images))
        if fresh:
            return op
        table._cache[key] = op
    return table._cache[key]


def adams(k: int, x: VirtualCharacter) -> VirtualCharacter:
    """psi^k: chi -> (g -> chi(g^k))."""
    return adams_matrix(x.table, k).apply(x)


def adjoint_matrix(table: CharTable, k: int, fresh: bool = False) -> OperationMatrix:
    key = ("adjoint", k % table.exponent)
    if fresh or key not in table._cache:
        m = adams_matrix(table, k, fresh=fresh)
        op = OperationMatrix(table, k, "adjoint", tuple(map(tuple, transpose(m.as_lists()))))
        if fresh:
            return op
        table._cache[key] = op
    return table._cache[key]


def adams_adjoint(k: int, x: VirtualCharacter) -> VirtualCharacter:
    """The adjoint of psi^k for the character pairing (transpose in the irreducible basis)."""
    return adjoint_matrix(x.table, k).apply(x)


def pullback_matrix(table: CharTable, a: int) -> OperationMatrix:
    """phi_a on an abelian table: chi -> chi^a, computed from pointwise powers of values."""
    if not table.is_abelian():
        raise ValueError(f"power pullback needs an abelian table, {table.name} is not")
    if math.gcd(a, table.order) != 1:
        raise ValueError(f"a={a} is not coprime to the group order {table.order}")
    key = ("pullback", a % table.exponent)
    if key not in table._cache:
        images = []
        for b in range(table.rank):
            vals = tuple(v ** (a % table.exponent) for v in table.irreducibles[b])
            images.append(to_virtual(ClassFunction(table, vals)))
        table._cache[key] = OperationMatrix(table, a, "pullback", _columns_matrix(table, images))
    return table._cache[key]


def power_pullback(a: int, x: VirtualCharacter) -> VirtualCharacter:
    return pullback_matrix(x.table, a).apply(x)


# --- Newton recursions ---------------------------------------------------------

def _newton_class_functions(x: VirtualCharacter, kmax: int, sign: int) -> list[ClassFunction]:
    # k * s_k = sum_{i=1}^k (sign)^(i-1) psi^i(x) s_{k-i}, over the rationals
    t = x.table
    f = x.class_function()
    psis = [None] + [f.compose_power(i) for i in range(1, kmax + 1)]
    out = [ClassFunction.constant(t, 1)]
    for k in range(1, kmax + 1):
        acc = ClassFunction.constant(t, 0)
        for i in range(1, k + 1):
            term = psis[i] * out[k - i]
            acc = acc + (term if sign == 1 or i % 2 == 1 else -term)
        out.append(acc * Fraction(1, k))
    return out


def _integral(fs: list[ClassFunction], what: str) -> list[VirtualCharacter]:
    out = []
    for k, f in enumerate(fs):
        try:
            out.append(to_virtual(f))
        except IntegralityError as exc:
            raise IntegralityError(f"{what}^{k}: {exc}") from None
    return out


def symmetric_powers(x: VirtualCharacter, kmax: int) -> list[VirtualCharacter]:
    """[sigma^0(x), ..., sigma^kmax(x)]."""
    return _integral(_newton_class_functions(x, kmax, 1), "sigma")


def exterior_powers(x: VirtualCharacter, kmax: int) -> list[VirtualCharacter]:
    return _integral(_newton_class_functions(x, kmax, -1), "lambda")


def symmetric_power(k: int, x: VirtualCharacter) -> VirtualCharacter:
    if k < 0:
        raise ValueError("k must be >= 0")
    return symmetric_powers(x, k)[k]


def exterior_power(k: int, x: VirtualCharacter) -> VirtualCharacter:
    if k < 0:
        raise ValueError("k must be >= 0")
    return exterior_powers(x, k)[k]


# --- difference-composition identity ------------------------------------------

def compositions(n: int):
    """All tuples of positive integers summing to n (the empty tuple for n = 0)."""
    if n == 0:
        yield ()
        return
    for cut in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cut:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


@dataclass(frozen=True)
class DifferenceCheck:
    lhs: VirtualCharacter
    rhs: VirtualCharacter

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def sigma_difference_expansion(i: int, x: VirtualCharacter, y: VirtualCharacter) -> DifferenceCheck:
    """sigma^i(x - y) versus sum over a + b_1 + ... + b_u = i of (-1)^u sigma^a(x) prod sigma^b_j(y)."""
    lhs = symmetric_power(i, x - y)
    sx = symmetric_powers(x, i)
    sy = symmetric_powers(y, i)
    rhs = x.table.zero()
    for a in range(i + 1):
        for comp in compositions(i - a):
            term = sx[a]
            for b in comp:
                term = product(term, sy[b])
            rhs = rhs + term if len(comp) % 2 == 0 else rhs - term
    return DifferenceCheck(lhs, rhs)


def adams_composition_holds(table: CharTable, k: int, l: int) -> bool:
    """psi^k o psi^l == psi^(kl) as matrices."""
    lhs = matmul(adams_matrix(table, k).as_lists(), adams_matrix(table, l).as_lists())
    return lhs == adams_matrix(table, k * l).as_lists()
