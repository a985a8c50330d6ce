"""The coefficient field Q(zeta_N)(t_1, ..., t_r).

Numerators and denominators are Laurent polynomials stored as dicts from
exponent tuples to cyclotomic coefficients. Fractions are normalized by
moving monomial content into the numerator, making the denominator monic,
and cancelling the denominator when it divides the numerator exactly. Full
gcd reduction is not attempted.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .cyclotomic import CyclotomicField, Elem

Exp = Tuple[int, ...]
Laurent = Dict[Exp, Elem]


class RationalFunctionField:
    """Rational functions in ``nvars`` indeterminates over Q(zeta_N)."""

    def __init__(self, nvars: int, order: int = 1, names=None):
        self.nvars = nvars
        self.cyclo = CyclotomicField(order)
        self.names = list(names) if names is not None else [f"t{i + 1}" for i in range(nvars)]
        self._zero_exp: Exp = (0,) * nvars
        self._one_poly: Laurent = {self._zero_exp: self.cyclo.one}

    def __repr__(self) -> str:
        return f"RationalFunctionField(nvars={self.nvars}, order={self.cyclo.order})"

    # constructors -----------------------------------------------------
    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, {}, self._one_poly, _normalized=True)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self._one_poly, self._one_poly, _normalized=True)

    def from_int(self, x) -> "FieldElement":
        if not x:
            return self.zero
        return FieldElement(self, {self._zero_exp: self.cyclo.from_rational(x)}, self._one_poly, _normalized=True)

    def monomial(self, exps: Exp, zeta_power: int = 0) -> "FieldElement":
        """``zeta^k * t^exps`` -- the image of a unit scalar."""
        return FieldElement(
            self, {tuple(exps): self.cyclo.zeta_power(zeta_power)}, self._one_poly, _normalized=True
        )

    # Laurent polynomial helpers ---------------------------------------
    def _add(self, a: Laurent, b: Laurent, sign: int = 1) -> Laurent:
        cy = self.cyclo
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = cy.add(out[e], c) if sign > 0 else cy.sub(out[e], c)
                if cy.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c if sign > 0 else cy.neg(c)
        return out

    def _mul(self, a: Laurent, b: Laurent) -> Laurent:
        if len(a) == 1 and len(b) == 1:
            (ea, ca), = a.items()
            (eb, cb), = b.items()
            return {tuple(x + y for x, y in zip(ea, eb)): self.cyclo.mul(ca, cb)}
        cy = self.cyclo
        out: Laurent = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                p = cy.mul(ca, cb)
                if e in out:
                    s = cy.add(out[e], p)
                    if cy.is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = p
        return out

    def _scale(self, a: Laurent, c: Elem, shift: Optional[Exp] = None) -> Laurent:
        cy = self.cyclo
        if shift is None:
            return {e: cy.mul(x, c) for e, x in a.items()}
        return {tuple(u + v for u, v in zip(e, shift)): cy.mul(x, c) for e, x in a.items()}

    def _divide_exact(self, num: Laurent, den: Laurent) -> Optional[Laurent]:
        """Quotient num/den if den divides num as Laurent polynomials, else None.

        Both sides are shifted to honest polynomials first; lex-order division
        by a single polynomial leaves remainder zero iff the division is exact.
        """
        if not num:
            return {}
        nshift = tuple(min(e[i] for e in num) for i in range(self.nvars))
        dshift = tuple(min(e[i] for e in den) for i in range(self.nvars))
        p = {tuple(x - s for x, s in zip(e, nshift)): c for e, c in num.items()}
        d = {tuple(x - s for x, s in zip(e, dshift)): c for e, c in den.items()}
        cy = self.cyclo
        lead_e = max(d)
        lead_inv = cy.inv(d[lead_e])
        quot: Laurent = {}
        while p:
            e = max(p)
            diff = tuple(x - y for x, y in zip(e, lead_e))
            if any(x < 0 for x in diff):
                return None
            c = cy.mul(p[e], lead_inv)
            quot[diff] = c
            p = self._add(p, self._scale(d, c, diff), sign=-1)
        back = tuple(a - b for a, b in zip(nshift, dshift))
        return {tuple(x + s for x, s in zip(e, back)): c for e, c in quot.items()}

    def _normalize(self, num: Laurent, den: Laurent) -> Tuple[Laurent, Laurent]:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return {}, self._one_poly
        cy = self.cyclo
        if len(den) == 1:
            (e, c), = den.items()
            inv = cy.inv(c)
            return self._scale(num, inv, tuple(-x for x in e)), self._one_poly
        dshift = tuple(-min(e[i] for e in den) for i in range(self.nvars))
        lead_inv = cy.inv(den[max(den)])
        den = self._scale(den, lead_inv, dshift)
        num = self._scale(num, lead_inv, dshift)
        q = self._divide_exact(num, den)
        if q is not None:
            return q, self._one_poly
        return num, den

    def format_poly(self, p: Laurent) -> str:
        if not p:
            return "0"
        parts = []
        for e in sorted(p, reverse=True):
            c = p[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(self.names, e) if k
            )
            cs = self.cyclo.format(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif " + " in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class FieldElement:
    """An element of a :class:`RationalFunctionField`; treat as immutable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalFunctionField, num: Laurent, den: Laurent, _normalized: bool = False):
        self.field = field
        if not _normalized:
            num, den = field._normalize(num, den)
        self.num = num
        self.den = den

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def _den_is_one(self) -> bool:
        return self.den is self.field._one_poly or self.den == self.field._one_poly

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _combine(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _combine(self, other, -1)

    def __rsub__(self, other) -> "FieldElement":
        return (-self) + other

    def __neg__(self) -> "FieldElement":
        f = self.field
        return FieldElement(f, f._scale(self.num, f.cyclo.neg(f.cyclo.one)), self.den, _normalized=True)

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if not self.num or not other.num:
            return f.zero
        if self._den_is_one() and other._den_is_one():
            return FieldElement(f, f._mul(self.num, other.num), f._one_poly, _normalized=True)
        return FieldElement(f, f._mul(self.num, other.num), f._mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.num:
            raise ZeroDivisionError("inverse of zero field element")
        return FieldElement(self.field, self.den, self.num)

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def as_unit(self) -> Optional[Tuple[Exp, int]]:
        """``(exps, k)`` if this element equals ``zeta^k t^exps``, else None."""
        if len(self.num) != 1 or not self._den_is_one():
            return None
        (e, c), = self.num.items()
        k = self.field.cyclo.discrete_log(c)
        if k is None:
            return None
        return e, k

    def __repr__(self) -> str:
        f = self.field
        if self._den_is_one():
            return f.format_poly(self.num)
        return f"({f.format_poly(self.num)})/({f.format_poly(self.den)})"


def _combine(a: FieldElement, b: FieldElement, sign: int) -> FieldElement:
    f = a.field
    if not b.num:
        return a
    if not a.num:
        return b if sign > 0 else -b
    if a.den == b.den:
        num = f._add(a.num, b.num, sign)
        if a._den_is_one():
            return FieldElement(f, num, f._one_poly, _normalized=True)
        return FieldElement(f, num, a.den)
    if b._den_is_one():
        return FieldElement(f, f._add(a.num, f._mul(b.num, a.den), sign), a.den)
    if a._den_is_one():
        return FieldElement(f, f._add(f._mul(a.num, b.den), b.num, sign), b.den)
    q = f._divide_exact(b.den, a.den)
    if q is not None:
        return FieldElement(f, f._add(f._mul(a.num, q), b.num, sign), b.den)
    q = f._divide_exact(a.den, b.den)
    if q is not None:
        return FieldElement(f, f._add(a.num, f._mul(b.num, q), sign), a.den)
    num = f._add(f._mul(a.num, b.den), f._mul(b.num, a.den), sign)
    return FieldElement(f, num, f._mul(a.den, b.den))
