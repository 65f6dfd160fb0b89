"""Character tables with exact cyclotomic values, class functions, virtual characters."""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .exact import CycNumber, Rational


class TableValidationError(ValueError):
    """Raised with the complete list of violated table invariants."""

    def __init__(self, errors: list[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class ClassInfo:
    name: str
    size: int
    rep_order: int


class CharTable:
    """A finite group given by class data, full power maps and irreducible characters.

    ``power_maps[k][c]`` is the class of g^k for g in class c, for every residue
    k mod the exponent.  ``irreducibles[a][c]`` is a CycNumber of order
    ``exponent``.  Class 0 is the identity class.  Optional extras: a Cayley
    table on element indices together with ``element_classes``, and for tables
    built by :func:`abelian_char_table` the cyclic invariants and labels.
    """

    def __init__(self, name: str, order: int, exponent: int, classes: Sequence[ClassInfo],
                 power_maps: Sequence[Sequence[int]], irreducibles: Sequence[Sequence[CycNumber]],
                 cayley: Sequence[Sequence[int]] | None = None,
                 element_classes: Sequence[int] | None = None,
                 abelian_invariants: Sequence[int] | None = None,
                 element_labels: Sequence[tuple] | None = None):
        self.name = name
        self.order = order
        self.exponent = exponent
        self.classes = tuple(classes)
        self.power_maps = tuple(tuple(p) for p in power_maps)
        self.irreducibles = tuple(tuple(r) for r in irreducibles)
        self.cayley = None if cayley is None else tuple(tuple(r) for r in cayley)
        self.element_classes = None if element_classes is None else tuple(element_classes)
        self.abelian_invariants = None if abelian_invariants is None else tuple(abelian_invariants)
        # labels double as character labels for abelian tables (dual group = group)
        self.element_labels = None if element_labels is None else tuple(element_labels)
        self._cache: dict = {}

    def __repr__(self):
        return f"CharTable({self.name!r}, order={self.order}, classes={self.nclasses})"

    @property
    def nclasses(self) -> int:
        return len(self.classes)

    @property
    def rank(self) -> int:
        return len(self.irreducibles)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def is_abelian(self) -> bool:
        return all(c.size == 1 for c in self.classes)

    def degree(self, a: int) -> int:
        return self.irreducibles[a][0].to_rational()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(a) for a in range(self.rank))

    def power_map(self, k: int) -> tuple[int, ...]:
        return self.power_maps[k % self.exponent]

    @property
    def trivial_index(self) -> int:
        for a, row in enumerate(self.irreducibles):
            if all(v == 1 for v in row):
                return a
        raise ValueError("table has no trivial character")

    def cyc(self, value: Rational) -> CycNumber:
        return CycNumber.rational(self.exponent, value)

    def identity_element(self) -> int:
        if self.cayley is None:
            raise ValueError(f"table {self.name} has no Cayley table")
        return self._cache.setdefault("identity", next(
            i for i in range(self.order) if all(self.cayley[i][j] == j for j in range(self.order))))

    def inverse_element(self, g: int) -> int:
        e = self.identity_element()
        return next(h for h in range(self.order) if self.cayley[g][h] == e)

    def class_rep_element(self, c: int) -> int:
        return self.element_classes.index(c)

    # --- character constructors ---
    def irreducible(self, a: int) -> "VirtualCharacter":
        return VirtualCharacter(self, tuple(int(i == a) for i in range(self.rank)))

    def trivial(self) -> "VirtualCharacter":
        return self.irreducible(self.trivial_index)

    def regular(self) -> "VirtualCharacter":
        return VirtualCharacter(self, self.degrees)

    def zero(self) -> "VirtualCharacter":
        return VirtualCharacter(self, (0,) * self.rank)

    def character(self, coords: Sequence[int]) -> "VirtualCharacter":
        return VirtualCharacter(self, tuple(coords))


# --- class functions and virtual characters -----------------------------------

@dataclass(frozen=True, eq=False)
class ClassFunction:
    table: CharTable
    values: tuple[CycNumber, ...]

    def _same(self, other: "ClassFunction"):
        if other.table is not self.table:
            raise ValueError("class functions live on different tables")

    def __add__(self, other):
        self._same(other)
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._same(other)
        return ClassFunction(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.table, tuple(-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ClassFunction(self.table, tuple(a * other for a in self.values))
        self._same(other)
        return ClassFunction(self.table, tuple(a * b for a, b in zip(self.values, other.values)))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    def __hash__(self):
        return hash((id(self.table), self.values))

    @classmethod
    def constant(cls, table: CharTable, value: Rational) -> "ClassFunction":
        return cls(table, tuple(table.cyc(value) for _ in range(table.nclasses)))

    @classmethod
    def from_ints(cls, table: CharTable, values: Sequence[Rational]) -> "ClassFunction":
        return cls(table, tuple(table.cyc(v) for v in values))

    def compose_power(self, k: int) -> "ClassFunction":
        """c -> f(class of g^k)."""
        pm = self.table.power_map(k)
        return ClassFunction(self.table, tuple(self.values[pm[c]] for c in range(self.table.nclasses)))


@dataclass(frozen=True, eq=False)
class VirtualCharacter:
    """Integer combination of irreducibles of ``table``."""

    table: CharTable
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.table.rank:
            raise ValueError(f"expected {self.table.rank} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def _same(self, other):
        if other.table is not self.table:
            raise ValueError("virtual characters live on different tables")

    def __add__(self, other):
        self._same(other)
        return VirtualCharacter(self.table, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return VirtualCharacter(self.table, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return VirtualCharacter(self.table, tuple(-a for a in self.coords))

    def __rmul__(self, c: int):
        return VirtualCharacter(self.table, tuple(c * a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        self._same(other)
        return product(self, other)

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.table is other.table and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.table), self.coords))

    def __repr__(self):
        return f"VirtualCharacter({self.table.name}, {self.coords})"

    def class_function(self) -> ClassFunction:
        t = self.table
        vals = []
        for c in range(t.nclasses):
            acc = t.cyc(0)
            for a, x in enumerate(self.coords):
                if x:
                    acc = acc + t.irreducibles[a][c] * x
            vals.append(acc)
        return ClassFunction(t, tuple(vals))

    @property
    def degree(self) -> int:
        return sum(a * d for a, d in zip(self.coords, self.table.degrees))


def structure_constants(table: CharTable) -> tuple:
    """N[a][b] = coordinates of chi_a * chi_b, cached on the table."""
    if "structure" not in table._cache:
        rows = []
        for a in range(table.rank):
            ca = table.irreducible(a).class_function()
            row = []
            for b in range(table.rank):
                cb = table.irreducible(b).class_function()
                row.append(to_virtual(ca * cb).coords)
            rows.append(tuple(row))
        table._cache["structure"] = tuple(rows)
    return table._cache["structure"]


def product(x: VirtualCharacter, y: VirtualCharacter) -> VirtualCharacter:
    N = structure_constants(x.table)
    out = [0] * x.table.rank
    for a, xa in enumerate(x.coords):
        if not xa:
            continue
        for b, yb in enumerate(y.coords):
            if yb:
                for c, n in enumerate(N[a][b]):
                    if n:
                        out[c] += xa * yb * n
    return VirtualCharacter(x.table, tuple(out))


# --- pairing and decomposition --------------------------------------------------

def _as_class_function(x) -> ClassFunction:
    return x.class_function() if isinstance(x, VirtualCharacter) else x


def pairing_cyc(x, y) -> CycNumber:
    x, y = _as_class_function(x), _as_class_function(y)
    if x.table is not y.table:
        raise ValueError("pairing of class functions on different tables")
    t = x.table
    acc = t.cyc(0)
    for size, a, b in zip(t.sizes, x.values, y.values):
        acc = acc + a * b.conj() * size
    return acc / t.order


def pairing(x, y):
    """<x, y> = (1/n) sum_c |c| x(c) conj(y(c)); a rational when possible."""
    v = pairing_cyc(x, y)
    return v.to_rational() if v.is_rational() else v


@dataclass(frozen=True)
class Decomposition:
    """Result of expanding a class function in the irreducible basis."""

    coefficients: tuple          # the pairings <f, chi_a>, rational or CycNumber
    offending: tuple[int, ...]   # indices whose coefficient is not a rational integer
    character: VirtualCharacter | None

    @property
    def integral(self) -> bool:
        return not self.offending


def decompose(f: ClassFunction) -> Decomposition:
    t = f.table
    coeffs = tuple(pairing(f, t.irreducible(a)) for a in range(t.rank))
    bad = tuple(a for a, c in enumerate(coeffs)
                if isinstance(c, CycNumber) or Fraction(c).denominator != 1)
    char = None if bad else VirtualCharacter(t, tuple(int(c) for c in coeffs))
    return Decomposition(coeffs, bad, char)


class IntegralityError(AssertionError):
    """A decomposition that must be integral was not (corrupted table or bug)."""


def to_virtual(f: ClassFunction) -> VirtualCharacter:
    d = decompose(f)
    if not d.integral:
        raise IntegralityError(
            f"non-integral decomposition on {f.table.name}: coordinates {list(d.offending)} "
            f"have values {[d.coefficients[a] for a in d.offending]}")
    return d.character


# --- abelian tables --------------------------------------------------------------

def _lcm(xs: Sequence[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)


def abelian_char_table(invariants: Sequence[int]) -> CharTable:
    """Character table of Z/n_1 x ... x Z/n_s.

    Elements and characters are both indexed by tuples in lexicographic order;
    chi_a(g) = zeta_e^(sum a_i g_i e / n_i).
    """
    inv = tuple(int(n) for n in invariants)
    if any(n < 1 for n in inv):
        raise ValueError(f"invariants must be >= 1: {inv}")
    e = _lcm(inv)
    labels = list(itertools.product(*(range(n) for n in inv)))
    index = {g: i for i, g in enumerate(labels)}
    order = len(labels)

    def elem_order(g):
        return _lcm([n // math.gcd(x, n) for x, n in zip(g, inv)])

    classes = [ClassInfo("(" + ",".join(map(str, g)) + ")", 1, elem_order(g)) for g in labels]
    power_maps = [[index[tuple((k * x) % n for x, n in zip(g, inv))] for g in labels] for k in range(e)]
    irr = []
    for a in labels:
        row = []
        for g in labels:
            m = sum(ai * gi * (e // n) for ai, gi, n in zip(a, g, inv)) % e
            row.append(CycNumber.zeta(e, m))
        irr.append(row)
    cayley = [[index[tuple((x + y) % n for x, y, n in zip(g, h, inv))] for h in labels] for g in labels]
    name = "x".join(f"C{n}" for n in inv) if inv else "C1"
    return CharTable(name, order, e, classes, power_maps, irr, cayley=cayley,
                     element_classes=list(range(order)), abelian_invariants=inv,
                     element_labels=labels)


# --- validation / ingestion --------------------------------------------------------

def _power_map_errors(n_classes: int, e: int, power_maps, classes) -> list[str]:
    errs = []
    if len(power_maps) != e:
        return [f"power_maps has {len(power_maps)} entries, expected exponent {e}"]
    for k, pm in enumerate(power_maps):
        if len(pm) != n_classes or any(not (0 <= c < n_classes) for c in pm):
            errs.append(f"power map {k} is malformed")
    if errs:
        return errs
    if e > 1 and list(power_maps[1]) != list(range(n_classes)):
        errs.append("power-map error: pi_1 is not the identity")
    if e == 1 and list(power_maps[0]) != list(range(n_classes)):
        errs.append("power-map error: pi_1 is not the identity")
    bad = [(k, l) for k in range(e) for l in range(e)
           if [power_maps[k][power_maps[l][c]] for c in range(n_classes)] != list(power_maps[(k * l) % e])]
    if bad:
        errs.append(f"power-map error: composition law pi_k o pi_l = pi_kl fails for (k,l) in {bad[:5]}")
    for k in range(e):
        for c, ci in enumerate(classes):
            img = classes[power_maps[k][c]]
            want = ci.rep_order // math.gcd(k, ci.rep_order)
            if img.rep_order != want:
                errs.append(f"power-map error: pi_{k} sends class {ci.name} (order {ci.rep_order}) "
                            f"to order {img.rep_order}, expected {want}")
                break
    return errs


def _cayley_errors(cayley, element_classes, n, classes, power_maps, e) -> list[str]:
    errs = []
    if len(cayley) != n or any(len(r) != n for r in cayley):
        return ["cayley table is not n x n"]
    if any(sorted(r) != list(range(n)) for r in cayley) or \
            any(sorted(r[j] for r in cayley) != list(range(n)) for j in range(n)):
        return ["cayley table is not a latin square"]
    if any(cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]
           for a in range(n) for b in range(n) for c in range(n)):
        errs.append("cayley table is not associative")
    if element_classes is None or len(element_classes) != n:
        return errs + ["element_classes must list a class for each element"]
    counts = [0] * len(classes)
    for c in element_classes:
        counts[c] += 1
    if counts != [c.size for c in classes]:
        errs.append("element_classes do not match the class sizes")
    ident = next((i for i in range(n) if all(cayley[i][j] == j for j in range(n))), None)
    if ident is None or element_classes[ident] != 0:
        errs.append("class 0 must be the class of the identity element")
    inv = [next(h for h in range(n) if cayley[g][h] == ident) for g in range(n)] if ident is not None else None
    if inv is not None:
        for g in range(n):
            for x in range(n):
                conj = cayley[cayley[inv[x]][g]][x]
                if element_classes[conj] != element_classes[g]:
                    errs.append("element_classes are not unions of conjugacy classes")
                    return errs
        for g in range(n):
            p = ident
            for k in range(e):
                if element_classes[p] != power_maps[k][element_classes[g]]:
                    errs.append(f"power map {k} disagrees with the cayley table")
                    return errs
                p = cayley[p][g]
    return errs


def validate_char_table(data: dict[str, Any]) -> CharTable:
    """Check every table invariant exactly; raise TableValidationError listing all failures."""
    errs: list[str] = []
    try:
        name = str(data["name"])
        n = int(data["order"])
        e = int(data["exponent"])
        classes = [ClassInfo(str(c["name"]), int(c["size"]), int(c["rep_order"])) for c in data["classes"]]
        power_maps = [[int(x) for x in pm] for pm in data["power_maps"]]
        raw_irr = data["irreducibles"]
    except (KeyError, TypeError, ValueError) as exc:
        raise TableValidationError([f"malformed table data: {exc!r}"]) from None
    for v in _iter_ints(data):
        if isinstance(v, float):
            raise TableValidationError(["floats are not allowed in table data"])
    if n < 1 or e < 1:
        raise TableValidationError(["order and exponent must be positive"])
    k = len(classes)
    if sum(c.size for c in classes) != n:
        errs.append(f"size-sum mismatch: class sizes add to {sum(c.size for c in classes)}, order is {n}")
    if not classes or classes[0].size != 1 or classes[0].rep_order != 1:
        errs.append("class 0 must be the identity class (size 1, order 1)")
    if _lcm([c.rep_order for c in classes]) != e:
        errs.append(f"exponent {e} is not the lcm of representative orders")
    if any(c.size < 1 or n % c.size for c in classes):
        errs.append("class sizes must divide the group order")
    errs.extend(_power_map_errors(k, e, power_maps, classes))
    irr: list[list[CycNumber]] = []
    if len(raw_irr) != k:
        errs.append(f"{len(raw_irr)} irreducibles for {k} classes")
    for a, row in enumerate(raw_irr):
        if len(row) != k:
            errs.append(f"irreducible {a} has {len(row)} values for {k} classes")
            continue
        vals = []
        for c, v in enumerate(row):
            if isinstance(v, int):
                v = [v]
            if len(v) > e or any(not isinstance(x, int) for x in v):
                errs.append(f"irreducible {a} class {c}: value must be an integer array of length <= {e}")
                v = [0]
            vals.append(CycNumber.from_powers(e, v))
        irr.append(vals)
    if errs:
        raise TableValidationError(errs)
    degs = []
    for a, row in enumerate(irr):
        d = row[0]
        if not d.is_rational() or Fraction(d.to_rational()).denominator != 1 or d.to_rational() <= 0:
            errs.append(f"non-integral degree: irreducible {a} has value {d} at the identity")
        else:
            degs.append(d.to_rational())
    for a in range(len(irr)):
        for b in range(a, len(irr)):
            acc = CycNumber.rational(e, 0)
            for cls, x, y in zip(classes, irr[a], irr[b]):
                acc = acc + x * y.conj() * cls.size
            if acc != n * int(a == b):
                errs.append(f"row-orthogonality error: <chi_{a}, chi_{b}> = {acc / n}")
    if len(degs) == len(irr) and sum(d * d for d in degs) != n:
        errs.append(f"sum of squared degrees is {sum(d * d for d in degs)}, not {n}")
    cayley = data.get("cayley")
    element_classes = data.get("element_classes")
    if cayley is not None:
        errs.extend(_cayley_errors(cayley, element_classes, n, classes, power_maps, e))
    if errs:
        raise TableValidationError(errs)
    return CharTable(name, n, e, classes, power_maps, irr, cayley=cayley, element_classes=element_classes)


def _iter_ints(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _iter_ints(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _iter_ints(v)
    else:
        yield obj


def table_to_json(t: CharTable) -> dict[str, Any]:
    out: dict[str, Any] = {
        "name": t.name,
        "order": t.order,
        "exponent": t.exponent,
        "classes": [{"name": c.name, "size": c.size, "rep_order": c.rep_order} for c in t.classes],
        "power_maps": [list(p) for p in t.power_maps],
        "irreducibles": [[cyc_to_powers(v) for v in row] for row in t.irreducibles],
    }
    if t.cayley is not None:
        out["cayley"] = [list(r) for r in t.cayley]
        out["element_classes"] = list(t.element_classes)
    return out


def cyc_to_powers(v: CycNumber) -> list[int]:
    """Integer coefficient array of length e over zeta^0..zeta^(e-1) (power-basis embedding)."""
    if any(Fraction(c).denominator != 1 for c in v.coeffs):
        raise ValueError(f"{v} has non-integral coefficients")
    return [int(c) for c in v.coeffs] + [0] * (v.order - len(v.coeffs))


# --- catalog ------------------------------------------------------------------------

NONABELIAN = ("s3", "d4", "q8", "a4")
CATALOG = tuple(f"c{n}" for n in range(1, 13)) + ("c2xc2", "c2xc4") + NONABELIAN


def load_table_file(path: str | Path) -> CharTable:
    with open(path) as fh:
        return validate_char_table(json.load(fh))


_loaded: dict[str, CharTable] = {}


def load_table(spec: str) -> CharTable:
    """Catalog name ('s3', 'c5', 'c2xc4', ...) or a path to a table JSON file.

    Catalog tables are shared instances, so repeated loads compare identical.
    """
    key = spec.strip().lower()
    if key in _loaded:
        return _loaded[key]
    if key in NONABELIAN:
        text = resources.files("lambdacl.catalog").joinpath(f"{key}.json").read_text()
        table = validate_char_table(json.loads(text))
    elif key and all(p.startswith("c") and p[1:].isdigit() for p in key.split("x")):
        table = abelian_char_table([int(p[1:]) for p in key.split("x")])
    elif Path(spec).exists():
        return load_table_file(spec)
    else:
        raise ValueError(f"unknown table {spec!r}")
    _loaded[key] = table
    return table
