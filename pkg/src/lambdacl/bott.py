"""Bott element identities in one line variable d.

With theta^k(d) = 1 + d + ... + d^(k-1):

* telescoping:  theta^k(d) * sum_{i<k'} d^(ik) = sum_{i<kk'} d^i   (Laurent polynomials)
* inverse:      theta^-1 = sum_{i<k'} d^(ik) - theta^-1 * sum_{1<=i<kk'} d^i
  in Q[[u]] / u^N with u = d - 1, where theta^k has constant term k.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import LaurentPoly, series_invert


def theta(k: int) -> LaurentPoly:
    return LaurentPoly.geometric(k)


@dataclass
class BottReport:
    k: int
    k_prime: int
    order: int
    telescoping: bool
    inverse: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.telescoping and self.inverse


def bott_checks(k: int, k_prime: int, order: int) -> BottReport:
    if k < 1 or k_prime < 1 or order < 1:
        raise ValueError("k, k' and N must all be >= 1")
    th = theta(k)
    partial = LaurentPoly.geometric(k_prime, step=k)
    lhs = th * partial
    rhs = LaurentPoly.geometric(k * k_prime)
    tele = lhs == rhs

    th_s = th.to_series(order)
    inv = series_invert(th_s)
    tail = LaurentPoly.geometric(k * k_prime - 1, start=1).to_series(order)
    rhs_s = partial.to_series(order) - inv * tail
    inv_ok = inv == rhs_s and (th_s * inv).is_one()

    w = {}
    if not tele:
        w["telescoping"] = {"lhs": lhs.terms(), "rhs": rhs.terms()}
    if not inv_ok:
        w["inverse"] = {"lhs": list(inv.coeffs), "rhs": list(rhs_s.coeffs)}
    return BottReport(k, k_prime, order, tele, inv_ok, w)
