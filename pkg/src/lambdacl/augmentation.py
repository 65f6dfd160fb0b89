"""Powers of the augmentation ideal I of a representation ring, as lattices inside I."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .chartab import CharTable, VirtualCharacter, product
from .lattice import LatticeSolver, invariant_factors, columns_to_matrix


def augmentation_basis(table: CharTable) -> list[VirtualCharacter]:
    """chi_a - deg(chi_a) * 1 for each nontrivial irreducible chi_a."""
    t0 = table.trivial_index
    out = []
    for a in range(table.rank):
        if a == t0:
            continue
        coords = [0] * table.rank
        coords[a] = 1
        coords[t0] = -table.degree(a)
        out.append(VirtualCharacter(table, tuple(coords)))
    return out


def _in_I_coords(table: CharTable, x: VirtualCharacter) -> list[int]:
    # in the basis above, an element of I is determined by its nontrivial coordinates
    t0 = table.trivial_index
    assert x.degree == 0, "element is not in the augmentation ideal"
    return [c for a, c in enumerate(x.coords) if a != t0]


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return (p, v) if n == 1 else None


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass
class AugLattice:
    table: CharTable
    power: int
    basis: list[list[int]]           # Z-basis of I^m in I-coordinates
    invariants: list[int]            # Smith invariants of I^m inside I
    index: int | None                # [I : I^m], None if not of full rank
    prime: int | None = None
    exponent: int | None = None      # least a with l^a I inside I^m
    index_is_prime_power: bool | None = None

    def basis_characters(self) -> list[VirtualCharacter]:
        t0 = self.table.trivial_index
        out = []
        for v in self.basis:
            coords = list(v)
            coords.insert(t0, 0)
            x = VirtualCharacter(self.table, tuple(coords))
            coords[t0] = -x.degree
            out.append(VirtualCharacter(self.table, tuple(coords)))
        return out


def _lattice_from(table: CharTable, chars: list[VirtualCharacter]) -> LatticeSolver:
    return LatticeSolver([_in_I_coords(table, x) for x in chars], table.rank - 1)


def power_lattice(table: CharTable, m: int) -> LatticeSolver:
    """I^m built iteratively as I^(m-1) * I, reduced to a basis at each step."""
    if m < 1:
        raise ValueError("m must be >= 1")
    base = augmentation_basis(table)
    current = _lattice_from(table, base)
    for _ in range(m - 1):
        prev = AugLattice(table, 0, current.basis, [], None).basis_characters()
        current = _lattice_from(table, [product(x, y) for x in prev for y in base])
    return current


def power_lattice_bruteforce(table: CharTable, m: int) -> LatticeSolver:
    """I^m spanned by every m-fold product of augmentation basis elements."""
    base = augmentation_basis(table)
    gens = []
    for combo in itertools.combinations_with_replacement(range(len(base)), m):
        x = base[combo[0]]
        for i in combo[1:]:
            x = product(x, base[i])
        gens.append(x)
    return _lattice_from(table, gens)


def augmentation_power_lattice(table: CharTable, m: int) -> AugLattice:
    lat = power_lattice(table, m)
    r = table.rank - 1
    if r == 0:
        return AugLattice(table, m, [], [], 1)
    inv = invariant_factors(columns_to_matrix(lat.basis, r), len(lat.basis)) if lat.basis else [0] * r
    full = lat.rank == r
    index = math.prod(inv) if full else None
    out = AugLattice(table, m, lat.basis, inv, index)
    pp = _prime_power(table.order)
    if pp is not None and full:
        l = pp[0]
        out.prime = l
        ipp = _prime_power(index)
        out.index_is_prime_power = index == 1 or (ipp is not None and ipp[0] == l)
        dmax = max(inv)
        a = _valuation(dmax, l)
        # verify l^a I is in I^m and l^(a-1) I is not, by direct membership
        unit = [[int(i == j) for j in range(r)] for i in range(r)]
        assert all(lat.contains([l ** a * x for x in e]) for e in unit)
        if a > 0:
            assert not all(lat.contains([l ** (a - 1) * x for x in e]) for e in unit)
        out.exponent = a
    return out
