"""Exact arithmetic: cyclotomic numbers, Laurent polynomials, truncated series.

Rationals are :class:`fractions.Fraction`; plain ``int`` is accepted anywhere a
rational is expected and results are normalised back to ``int`` when the
denominator is 1.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def _norm(x: Rational) -> Rational:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# --- integer polynomials (coefficient lists, constant term first) -----------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence[Rational], b: Sequence[Rational]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Sequence[Rational], b: Sequence[Rational]) -> tuple[list, list]:
    """Long division over Q.  ``b`` must be nonzero."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim(list(a))
    lead = b[-1]
    quo = [0] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = _norm(Fraction(rem[-1]) / lead)
        quo[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        rem = [_norm(x) for x in rem]
        _trim(rem)
    return _trim([_norm(x) for x in quo]), rem


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, constant term first."""
    if e < 1:
        raise ValueError(f"cyclotomic_polynomial needs e >= 1, got {e}")
    num = [-1] + [0] * (e - 1) + [1]
    den = [1]
    for d in range(1, e):
        if e % d == 0:
            den = poly_mul(den, cyclotomic_polynomial(d))
    quo, rem = poly_divmod(num, den)
    assert not rem, "x^e - 1 not divisible by the proper cyclotomic factors"
    return tuple(int(c) for c in quo)


def euler_phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@functools.lru_cache(maxsize=None)
def _power_table(e: int) -> tuple[tuple[int, ...], ...]:
    # row m = coefficients of x^m mod Phi_e, for 0 <= m < e
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow coefficient
        top = cur[-1] if deg > 0 else 0
        cur = [0] + cur[:-1] if deg > 0 else []
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


# --- cyclotomic numbers ------------------------------------------------------

class CycNumber:
    """An element of Q(zeta_e) in the power basis zeta^0 .. zeta^(phi(e)-1).

    Instances are immutable; equality is coefficientwise, which is canonical
    because the basis is fixed.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence[Rational]):
        deg = euler_phi(order)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for order {order}, got {len(coeffs)}")
        self.order = order
        self.coeffs = tuple(_norm(Fraction(c)) if isinstance(c, Fraction) else int(c) for c in coeffs)
        self._hash = None

    @classmethod
    def from_powers(cls, order: int, powers: Iterable[Rational]) -> "CycNumber":
        """Reduce sum_m powers[m] * zeta^m (any length; exponents taken mod e)."""
        table = _power_table(order)
        out = [0] * euler_phi(order)
        for m, c in enumerate(powers):
            if c == 0:
                continue
            for i, t in enumerate(table[m % order]):
                if t:
                    out[i] += c * t
        return cls(order, out)

    @classmethod
    def rational(cls, order: int, value: Rational) -> "CycNumber":
        out = [0] * euler_phi(order)
        out[0] = value
        return cls(order, out)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycNumber":
        return cls.from_powers(order, [0] * (power % order) + [1])

    def _check(self, other: "CycNumber") -> None:
        if self.order != other.order:
            raise ValueError(f"mismatched cyclotomic orders {self.order} and {other.order}")

    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return CycNumber.from_powers(self.order, prod)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "CycNumber":
        if not isinstance(other, (int, Fraction)):
            raise TypeError("CycNumber division is only by rationals")
        return CycNumber(self.order, [Fraction(a) / other for a in self.coeffs])

    def __pow__(self, n: int) -> "CycNumber":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = CycNumber.rational(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, t: int) -> "CycNumber":
        """Image under zeta -> zeta^t (t coprime to the order)."""
        if math.gcd(t, self.order) != 1:
            raise ValueError(f"t={t} is not coprime to {self.order}")
        return CycNumber.from_powers_sparse(self.order, {(i * t) % self.order: c for i, c in enumerate(self.coeffs) if c})

    @classmethod
    def from_powers_sparse(cls, order: int, terms: dict) -> "CycNumber":
        dense = [0] * order
        for m, c in terms.items():
            dense[m % order] += c
        return cls.from_powers(order, dense)

    def conj(self) -> "CycNumber":
        if self.order <= 2:
            return self
        return self.galois(self.order - 1)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*z{self.order}^{i}")
        return " + ".join(terms) if terms else "0"


def cyc_arith(op: str, a: CycNumber, b: CycNumber | None = None) -> CycNumber:
    """Dispatch form of the arithmetic: op in {'add', 'mul', 'conj'}."""
    if op == "conj":
        return a.conj()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def galois_apply(a: CycNumber, t: int) -> CycNumber:
    return a.galois(t)


# --- Laurent polynomials in one variable ------------------------------------

@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial sum c_i d^(low+i), trimmed at both ends."""

    low: int
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(i, 0) for i in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls.make({exp: coeff})

    @classmethod
    def geometric(cls, count: int, step: int = 1, start: int = 0) -> "LaurentPoly":
        """sum_{i < count} d^(start + i*step)."""
        terms: dict[int, int] = {}
        for i in range(count):
            terms[start + i * step] = terms.get(start + i * step, 0) + 1
        return cls.make(terms)

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = self.terms()
        for k, v in other.terms().items():
            t[k] = t.get(k, 0) + v
        return LaurentPoly.make(t)

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        t: dict[int, int] = {}
        for i, a in self.terms().items():
            for j, b in other.terms().items():
                t[i + j] = t.get(i + j, 0) + a * b
        return LaurentPoly.make(t)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_series(self, order: int) -> "TruncSeries":
        """Substitute d = 1 + u and truncate mod u^order (needs low >= 0)."""
        if self.coeffs and self.low < 0:
            raise ValueError("negative powers of d are not units in Q[[u]] as polynomials; shift first")
        out = [Fraction(0)] * order
        for exp, c in self.terms().items():
            for i in range(min(exp, order - 1) + 1):
                out[i] += c * math.comb(exp, i)
        return TruncSeries(order, tuple(out))


# --- truncated power series over Q ------------------------------------------

@dataclass(frozen=True)
class TruncSeries:
    """c_0 + c_1 u + ... + c_(N-1) u^(N-1), arithmetic mod u^N."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("series order must be positive")
        c = tuple(_norm(Fraction(x)) for x in self.coeffs[: self.order])
        c = c + (0,) * (self.order - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, (1,))

    def _check(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TruncSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        n = self.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(n, tuple(out))

    __rmul__ = __mul__

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])


def series_invert(f: TruncSeries, order: int | None = None) -> TruncSeries:
    """Inverse mod u^order by the coefficient recursion g_n = -(sum_{i>=1} f_i g_{n-i}) / f_0."""
    n = f.order if order is None else order
    c = f.coeffs + (0,) * max(0, n - f.order)
    if c[0] == 0:
        raise ZeroDivisionError("constant term is zero; series is not invertible")
    f0 = Fraction(c[0])
    g: list = [1 / f0]
    for k in range(1, n):
        acc = sum((c[i] * g[k - i] for i in range(1, k + 1) if c[i]), Fraction(0))
        g.append(-acc / f0)
    return TruncSeries(n, tuple(g))
