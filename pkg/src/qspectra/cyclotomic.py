"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are tuples of ``Fraction`` of length ``phi(N)``: coefficients of
``1, zeta, zeta^2, ...`` reduced modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

Elem = Tuple[Fraction, ...]


def _poly_divmod(num: List[Fraction], den: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] / lead
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not _trim(rem)
    poly = _trim(poly)
    return tuple(int(c) for c in poly)


class CyclotomicField:
    """Q(zeta_N) with exact rational coefficients."""

    def __init__(self, order: int):
        self.order = order
        self.modulus = cyclotomic_poly(order)
        self.degree = len(self.modulus) - 1
        self.zero: Elem = (Fraction(0),) * self.degree
        self.one: Elem = (Fraction(1),) + (Fraction(0),) * (self.degree - 1)
        self._powers = [self._reduce_list([Fraction(0)] * k + [Fraction(1)]) for k in range(order)]

    def __repr__(self) -> str:
        return f"CyclotomicField({self.order})"

    def _reduce_list(self, coeffs: Sequence[Fraction]) -> Elem:
        c = list(coeffs)
        d = self.degree
        mod = self.modulus
        # Phi_N is monic
        for top in range(len(c) - 1, d - 1, -1):
            lead = c[top]
            if lead:
                shift = top - d
                for i in range(d + 1):
                    c[shift + i] -= lead * mod[i]
        c = c[:d] + [Fraction(0)] * (d - len(c))
        return tuple(c)

    def from_rational(self, x) -> Elem:
        return (Fraction(x),) + (Fraction(0),) * (self.degree - 1)

    def zeta_power(self, k: int) -> Elem:
        return self._powers[k % self.order]

    def discrete_log(self, a: Elem) -> int | None:
        """The k in [0, N) with zeta^k == a, or None."""
        for k, p in enumerate(self._powers):
            if p == a:
                return k
        return None

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple(-x for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        if self.degree == 1:
            return (a[0] * b[0],)
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce_list(out)

    def is_zero(self, a: Elem) -> bool:
        return not any(a)

    def inv(self, a: Elem) -> Elem:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.degree == 1:
            return (1 / a[0],)
        # extended Euclid: find s with s*a = 1 mod Phi_N
        r0 = [Fraction(c) for c in self.modulus]
        r1 = _trim(list(a))
        s0: List[Fraction] = []
        s1: List[Fraction] = [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            prod = _poly_mul(q, s1)
            s0, s1 = s1, _poly_sub(s0, prod)
        c = r1[0]
        return self._reduce_list([x / c for x in s1])

    def is_one(self, a: Elem) -> bool:
        return a == self.one

    def format(self, a: Elem) -> str:
        parts = []
        for k, c in enumerate(a):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(parts) if parts else "0"


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])
