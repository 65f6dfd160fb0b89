"""Finite fields GF(q) with vectorised numpy arithmetic, plus row reduction over them.

Elements are encoded as integers 0..q-1.  For q = p prime this is the residue;
for q = p^r an element sum c_i x^i (mod the smallest monic irreducible of
degree r, ordered by encoding) is encoded as sum c_i p^i.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

MAX_Q = 1024


def prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    r = 0
    while q % p == 0:
        q //= p
        r += 1
    return (p, r) if q == 1 else None


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # coefficient lists, constant first; f monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for k in range(df + 1):
                a[i - df + k] = (a[i - df + k] - c * f[k]) % p
    return [x % p for x in a[:df]] + [0] * max(0, df - len(a))


def _is_irreducible(f: list[int], p: int) -> bool:
    r = len(f) - 1
    for d in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def _irreducible(p: int, r: int) -> list[int]:
    for low in itertools.product(range(p), repeat=r):
        f = list(reversed(low)) + [1]
        if f[0] and _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


class GF:
    def __init__(self, q: int):
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"q={q} is not a prime power")
        if q > MAX_Q:
            raise ValueError(f"q={q} exceeds the supported bound {MAX_Q}")
        self.q = q
        self.p, self.r = pp
        self.prime = self.r == 1
        if self.prime:
            self.modulus = [0, 1]
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = pow(a, -1, q)
            self._inv = inv
        else:
            self.modulus = _irreducible(self.p, self.r)
            self._build_tables()

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.r)]

    def _encode(self, digits: list[int]) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _build_tables(self):
        q, p = self.q, self.p
        digits = [self._digits(a) for a in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = self._encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
                prod = [0] * (2 * self.r - 1)
                for i, x in enumerate(digits[a]):
                    for k, y in enumerate(digits[b]):
                        prod[i + k] += x * y
                mul[a, b] = self._encode(_poly_mod(prod, self.modulus, p))
        self._add, self._mul = add, mul
        self._neg = np.array([self._encode([(-x) % p for x in digits[a]]) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self._inv = inv

    def __repr__(self):
        return f"GF({self.q})"

    # vectorised arithmetic; arguments are ints or int64 arrays
    def add(self, a, b):
        return (a + b) % self.q if self.prime else self._add[a, b]

    def neg(self, a):
        return (-a) % self.q if self.prime else self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return (a * b) % self.q if self.prime else self._mul[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inv(a)), -k
        out = 1
        for _ in range(k):
            out = int(self.mul(out, a))
        return out

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = int(self.mul(x, a))
            n += 1
        return n

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def rref(F: GF, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of M (rows are vectors) and its pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = F.mul(A[r], F.inv(int(A[r, c])))
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            f = A[others, c]
            A[others] = F.sub(A[others], F.mul(f[:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def reduce_against(F: GF, R: np.ndarray, pivots: list[int], V: np.ndarray) -> np.ndarray:
    """Remainders of the rows of V modulo the row space of an RREF matrix (zero on pivot columns)."""
    V = np.array(V, dtype=np.int64, copy=True, ndmin=2)
    for i, c in enumerate(pivots):
        coef = V[:, c].copy()
        if coef.any():
            V = F.sub(V, F.mul(coef[:, None], R[i][None, :]))
    return V
