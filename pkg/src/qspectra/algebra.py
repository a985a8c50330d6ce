"""PBW normal-form arithmetic for K_n and its quotients K_n/<T>.

Monomials are exponent tuples over the ordered generators
x_1 < y_1 < x_2 < y_2 < ... < x_n < y_n, so position ``2(i-1)`` holds x_i and
``2(i-1)+1`` holds y_i. Products are formed one generator at a time: a
generator appended on the right is pushed left past larger generators using
the defining relations. The only inhomogeneous relation, y_i x_i, produces an
Omega_{i-1} correction living at strictly lower levels, so the rewriting
terminates.

A quotient by an admissible set T gets its own rewrite table, level by level:

* ``free``  -- x_i, y_i survive and Omega_i is not in T:
  y_i x_i = q_i^-1 x_i y_i - q_i^-1 Omega_{i-1}
* ``gwa``   -- x_i, y_i survive but Omega_i lies in T: both
  y_i x_i and x_i y_i collapse onto multiples of Omega_{i-1}
* ``cut``   -- x_i or y_i lies in T and is sent to zero.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .field import FieldElement
from .scalars import ParamGroup, UnitScalar
from .strata import OMEGA, X, Y, AdmissibleSet, PSymbol, psymbols

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, FieldElement]

FREE, GWA, CUT = "free", "gwa", "cut"


class Generator(NamedTuple):
    kind: str  # "x" or "y"
    index: int

    @property
    def pos(self) -> int:
        return 2 * (self.index - 1) + (self.kind == Y)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def generator_at(pos: int) -> Generator:
    return Generator(Y if pos % 2 else X, pos // 2 + 1)


def generators(n: int) -> List[Generator]:
    return [generator_at(p) for p in range(2 * n)]


class ContextMismatch(ValueError):
    pass


class AlgebraContext:
    """K_n (``quotient=None``) or K_n/<T> with its own PBW rewrite table."""

    def __init__(self, params: ParamGroup, quotient: Optional[AdmissibleSet] = None):
        self.params = params
        self.n = n = params.n
        self.field = params.field
        if quotient is not None:
            from .strata import is_admissible

            if quotient.n != n:
                raise ValueError(f"admissible set is for n={quotient.n}, algebra has n={n}")
            if not is_admissible(n, quotient.bits):
                raise ValueError(f"{quotient} is not admissible")
        self.quotient = quotient
        self.killed = frozenset(
            g.pos for g in generators(n) if quotient is not None and g.kind in quotient.level(g.index)
        )
        self.modes: Dict[int, str] = {}
        for i in range(1, n + 1):
            if Generator(X, i).pos in self.killed or Generator(Y, i).pos in self.killed:
                self.modes[i] = CUT
            elif quotient is not None and quotient.has(OMEGA, i):
                self.modes[i] = GWA
            else:
                self.modes[i] = FREE
        self.one_mono: Monomial = (0,) * (2 * n)
        self._swap: Dict[Tuple[int, int], FieldElement] = {}
        self._swap_units: Dict[Tuple[int, int], UnitScalar] = {}
        self._build_swap_table()
        self._memo: Dict[Tuple[Monomial, int], Terms] = {}
        self._omega: Dict[int, Terms] = {0: {}}

    def __repr__(self) -> str:
        q = "" if self.quotient is None else f" / <{self.quotient}>"
        return f"AlgebraContext(K_{self.n}{q})"

    # relation table ---------------------------------------------------
    def _build_swap_table(self) -> None:
        g = self.params
        for h in range(2 * self.n):
            for lo in range(h):
                a, b = generator_at(h), generator_at(lo)
                if a.index == b.index:
                    continue
                i, j = b.index, a.index  # i < j; h = (kind, j) sits to the left of lo = (kind, i)
                if a.kind == X and b.kind == X:
                    u = g.q(i).inverse() * g.p(j) * g.gamma(i, j).inverse()
                elif a.kind == Y and b.kind == Y:
                    u = g.gamma(i, j).inverse()
                elif a.kind == X and b.kind == Y:
                    u = g.q(i) * g.gamma(i, j)
                else:
                    u = g.p(j).inverse() * g.gamma(i, j)
                self._swap_units[(h, lo)] = u
                self._swap[(h, lo)] = u.embed()

    def swap_scalar(self, left: Generator, right: Generator) -> UnitScalar:
        """c with left*right = c*right*left, for generators on different levels."""
        if left.index == right.index:
            raise ValueError("same-level pair has no scalar swap")
        if left.pos > right.pos:
            return self._swap_units[(left.pos, right.pos)]
        return self._swap_units[(right.pos, left.pos)].inverse()

    def _q(self, i: int) -> FieldElement:
        return self.params.q(i).embed()

    def _p(self, i: int) -> FieldElement:
        return self.params.p(i).embed()

    # term arithmetic --------------------------------------------------
    def _accumulate(self, out: Terms, terms: Terms, coef: Optional[FieldElement] = None) -> None:
        for m, c in terms.items():
            if coef is not None:
                c = c * coef
            if m in out:
                s = out[m] + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
            elif not c.is_zero():
                out[m] = c

    def omega_terms(self, i: int) -> Terms:
        """Image of Omega_i, computed as sum_{l<=i} (q_l - p_l) * y_l * x_l."""
        hit = self._omega.get(i)
        if hit is not None:
            return hit
        out = dict(self.omega_terms(i - 1))
        xi, yi = Generator(X, i).pos, Generator(Y, i).pos
        if xi not in self.killed and yi not in self.killed:
            yx = self._times_gen(self._unit(yi), xi)
            self._accumulate(out, yx, self._q(i) - self._p(i))
        self._omega[i] = out
        return out

    def _unit(self, pos: int) -> Monomial:
        m = [0] * (2 * self.n)
        m[pos] = 1
        return tuple(m)

    def _times_gen(self, mono: Monomial, pos: int) -> Terms:
        """mono * generator, in normal form. Returned dicts must not be mutated."""
        if pos in self.killed:
            return {}
        key = (mono, pos)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        h = len(mono) - 1
        while h >= 0 and not mono[h]:
            h -= 1
        one = self.field.one
        level = pos // 2 + 1
        if h <= pos:
            if h == pos - 1 and pos % 2 and self.modes[level] == GWA:
                # ... x_i * y_i with Omega_i = 0: x_i y_i = p_i/(p_i - q_i) Omega_{i-1}
                rest = _dec(mono, h)
                coef = self._p(level) / (self._p(level) - self._q(level))
                out: Terms = {}
                self._accumulate(out, self._mono_times_terms(rest, self.omega_terms(level - 1)), coef)
            else:
                out = {_inc(mono, pos): one}
        else:
            rest = _dec(mono, h)
            out = {}
            if h // 2 == pos // 2:
                # h = y_i, pos = x_i
                lower = self.omega_terms(level - 1)
                if self.modes[level] == GWA:
                    coef = (self._p(level) - self._q(level)).inverse()
                    self._accumulate(out, self._mono_times_terms(rest, lower), coef)
                else:
                    qinv = self._q(level).inverse()
                    swapped = self._terms_times_gen(self._times_gen(rest, pos), h)
                    self._accumulate(out, swapped, qinv)
                    if lower:
                        self._accumulate(out, self._mono_times_terms(rest, lower), -qinv)
            else:
                swapped = self._terms_times_gen(self._times_gen(rest, pos), h)
                self._accumulate(out, swapped, self._swap[(h, pos)])
        self._memo[key] = out
        return out

    def _terms_times_gen(self, terms: Terms, pos: int) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            self._accumulate(out, self._times_gen(m, pos), c)
        return out

    def _mono_times_mono(self, a: Monomial, b: Monomial) -> Terms:
        cur: Terms = {a: self.field.one}
        for pos, e in enumerate(b):
            for _ in range(e):
                cur = self._terms_times_gen(cur, pos)
                if not cur:
                    return cur
        return cur

    def _mono_times_terms(self, a: Monomial, terms: Terms) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            self._accumulate(out, self._mono_times_mono(a, m), c)
        return out

    # public constructors ----------------------------------------------
    def poly(self, terms: Terms) -> "NCPoly":
        return NCPoly(self, {m: c for m, c in terms.items() if not c.is_zero()})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {self.one_mono: self.field.one})

    def scalar(self, c: Union[FieldElement, UnitScalar, int]) -> "NCPoly":
        if isinstance(c, UnitScalar):
            c = c.embed()
        elif isinstance(c, int):
            c = self.field.from_int(c)
        return self.poly({self.one_mono: c})

    def gen(self, g: Union[Generator, str], index: Optional[int] = None) -> "NCPoly":
        if isinstance(g, str):
            g = Generator(g, index)
        if g.pos in self.killed:
            return self.zero()
        return self.poly({self._unit(g.pos): self.field.one})

    def x(self, i: int) -> "NCPoly":
        return self.gen(Generator(X, i))

    def y(self, i: int) -> "NCPoly":
        return self.gen(Generator(Y, i))

    def omega(self, i: int) -> "NCPoly":
        if not 0 <= i <= self.n:
            raise ValueError(f"Omega index {i} out of range")
        return NCPoly(self, dict(self.omega_terms(i)))

    def symbol(self, s: PSymbol) -> "NCPoly":
        if s.kind == OMEGA:
            return self.omega(s.index)
        return self.gen(Generator(s.kind, s.index))

    def word(self, gens: Iterable[Union[Generator, str]]) -> "NCPoly":
        """Product of generators in the order given (``"x2"`` style strings allowed)."""
        cur: Terms = {self.one_mono: self.field.one}
        for g in gens:
            if isinstance(g, str):
                g = Generator(g[0], int(g[1:]))
            cur = self._terms_times_gen(cur, g.pos)
        return NCPoly(self, cur)

    def monomial(self, exps: Sequence[int]) -> "NCPoly":
        """The PBW basis element with these exponents, reduced in this context."""
        gens = [generator_at(p) for p, e in enumerate(exps) for _ in range(e)]
        return self.word(gens)

    def survivors(self) -> List[Generator]:
        return [g for g in generators(self.n) if g.pos not in self.killed]

    def multiply(self, f: "NCPoly", g: "NCPoly") -> "NCPoly":
        if f.ctx is not self or g.ctx is not self:
            raise ContextMismatch("operands live in different algebra contexts")
        out: Terms = {}
        for a, ca in f.terms.items():
            for b, cb in g.terms.items():
                self._accumulate(out, self._mono_times_mono(a, b), ca * cb)
        return NCPoly(self, out)

    def project(self, f: "NCPoly") -> "NCPoly":
        """Image of a polynomial from another context over the same parameters."""
        if f.ctx.params != self.params:
            raise ContextMismatch("parameter groups differ")
        out: Terms = {}
        for m, c in f.terms.items():
            self._accumulate(out, self._mono_times_mono(self.one_mono, m), c)
        return NCPoly(self, out)


def _inc(m: Monomial, pos: int) -> Monomial:
    return m[:pos] + (m[pos] + 1,) + m[pos + 1:]


def _dec(m: Monomial, pos: int) -> Monomial:
    return m[:pos] + (m[pos] - 1,) + m[pos + 1:]


class NCPoly:
    """Element of K_n or a quotient, as a map PBW monomial -> coefficient."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Terms):
        self.ctx = ctx
        self.terms = terms

    def _check(self, other: "NCPoly") -> None:
        if other.ctx is not self.ctx:
            raise ContextMismatch("operands live in different algebra contexts")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        out = dict(self.terms)
        self.ctx._accumulate(out, other.terms)
        return NCPoly(self.ctx, out)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            return self.ctx.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "NCPoly":
        return self.scale(other)

    def scale(self, c: Union[FieldElement, UnitScalar, int]) -> "NCPoly":
        if isinstance(c, UnitScalar):
            c = c.embed()
        elif isinstance(c, int):
            c = self.ctx.field.from_int(c)
        if c.is_zero():
            return self.ctx.zero()
        return NCPoly(self.ctx, {m: v * c for m, v in self.terms.items()})

    def __pow__(self, k: int) -> "NCPoly":
        out = self.ctx.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        if other.ctx is not self.ctx or self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    __hash__ = None  # type: ignore[assignment]

    def leading(self) -> Tuple[Monomial, FieldElement]:
        m = max(self.terms, key=lambda e: (sum(e), e[::-1]))
        return m, self.terms[m]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda e: (sum(e), e[::-1])):
            word = format_monomial(m)
            parts.append(f"({self.terms[m]!r})*{word}")
        return " + ".join(parts)


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for pos, e in enumerate(m):
        if e:
            g = str(generator_at(pos))
            parts.append(g if e == 1 else f"{g}^{e}")
    return "*".join(parts) if parts else "1"


# operations ---------------------------------------------------------------

def multiply(f: NCPoly, g: NCPoly) -> NCPoly:
    return f.ctx.multiply(f, g)


def omega(ctx: AlgebraContext, i: int) -> NCPoly:
    return ctx.omega(i)


def scalar_commutes(a: NCPoly, b: NCPoly) -> Optional[UnitScalar]:
    """The unit c with a*b == c*b*a, or None if there is none."""
    if a.is_zero() or b.is_zero():
        raise ValueError("scalar_commutes needs nonzero operands")
    ab, ba = a * b, b * a
    m, beta = ba.leading()
    alpha = ab.terms.get(m)
    if alpha is None:
        return None
    u = a.ctx.params.unembed(alpha / beta)
    if u is None:
        return None
    if ab != ba.scale(u):
        return None
    return u


def is_normal(z: NCPoly, ctx: Optional[AlgebraContext] = None) -> Optional[Dict[Generator, UnitScalar]]:
    """Witness scalars c_g with z*g == c_g*g*z for each surviving generator."""
    ctx = ctx or z.ctx
    if z.ctx is not ctx:
        raise ContextMismatch("element lives in another context")
    if z.is_zero():
        raise ValueError("is_normal needs a nonzero element")
    out = {}
    for g in ctx.survivors():
        c = scalar_commutes(z, ctx.gen(g))
        if c is None:
            return None
        out[g] = c
    return out


def quotient_reduce(T: AdmissibleSet, f: NCPoly, ctx: Optional[AlgebraContext] = None) -> NCPoly:
    """Image of ``f`` in K_n/<T>. Pass ``ctx`` to reuse a quotient engine."""
    if ctx is None:
        ctx = AlgebraContext(f.ctx.params, T)
    elif ctx.quotient != T:
        raise ContextMismatch("context is for a different admissible set")
    return ctx.project(f)


def trace_check(T: AdmissibleSet, params: ParamGroup, ctx: Optional[AlgebraContext] = None) -> Optional[PSymbol]:
    """None when <T> meets P_n exactly in T, else the first violating symbol."""
    base = AlgebraContext(params)
    ctx = ctx or AlgebraContext(params, T)
    for s in psymbols(params.n):
        image = quotient_reduce(T, base.symbol(s), ctx)
        if image.is_zero() != (s in T):
            return s
    return None


def h_eigenvalue(m: Union[Sequence[int], PSymbol, Generator], n: Optional[int] = None) -> Tuple[int, ...]:
    """H-character in coordinates (h_1, h_2, h_3, h_5, ..., h_{2n-1}).

    Uses h_{2i} = h_{2i-1}^-1 h_1 h_2 to eliminate the even coordinates.
    """
    if isinstance(m, (PSymbol, Generator)):
        if n is None:
            raise ValueError("n is required for a single symbol")
        if m.kind == OMEGA:
            return (1, 1) + (0,) * (n - 1)
        exps = [0] * (2 * n)
        exps[Generator(m.kind, m.index).pos] = 1
        m = exps
    n = len(m) // 2
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        a, b = m[2 * (i - 1)], m[2 * (i - 1) + 1]
        if i == 1:
            out[0] += a
            out[1] += b
        else:
            out[i] += a - b
            out[0] += b
            out[1] += b
    return tuple(out)


# skew polynomial tower ------------------------------------------------------

def sigma_scalar(params: ParamGroup, i: int, g: Generator) -> UnitScalar:
    """x_i * g = sigma_i(g) * x_i for g at a level below i."""
    j = g.index
    if g.kind == X:
        return params.q(j).inverse() * params.p(i) * params.gamma(i, j)
    return params.q(j) * params.gamma(j, i)


def tau_scalar(params: ParamGroup, i: int, g: Generator) -> UnitScalar:
    """y_i * g = tau_i(g) * y_i + delta_i(g) for g below y_i."""
    j = g.index
    if j == i:
        return params.q(i).inverse()
    if g.kind == X:
        return params.p(i).inverse() * params.gamma(j, i)
    return params.gamma(i, j)


def delta_of_x(ctx: AlgebraContext, i: int) -> NCPoly:
    """delta_i(x_i) = -q_i^-1 sum_{l<i} (q_l - p_l) y_l x_l."""
    g = ctx.params
    total = ctx.zero()
    for l in range(1, i):
        total = total + ctx.word([Generator(Y, l), Generator(X, l)]).scale(g.q(l).embed() - g.p(l).embed())
    return total.scale(-(g.q(i).embed().inverse()))


def verify_skew_tower(params: ParamGroup, degree_bound: int = 3) -> List[str]:
    """Check the iterated Ore-extension presentation; returns failure messages."""
    ctx = AlgebraContext(params)
    n = params.n
    failures: List[str] = []
    for i in range(1, n + 1):
        xi, yi = Generator(X, i), Generator(Y, i)
        below_x = [g for g in generators(n) if g.index < i]
        below_y = below_x + [xi]

        def tau(word: Sequence[Generator]) -> FieldElement:
            c = params.identity()
            for g in word:
                c = c * tau_scalar(params, i, g)
            return c.embed()

        def sigma(word: Sequence[Generator]) -> FieldElement:
            c = params.identity()
            for g in word:
                c = c * sigma_scalar(params, i, g)
            return c.embed()

        def delta(word: Sequence[Generator]) -> NCPoly:
            w = ctx.word(word)
            return ctx.word([yi]) * w - (w * ctx.word([yi])).scale(tau(word))

        for g in below_x:
            lhs = ctx.word([xi, g])
            rhs = ctx.word([g, xi]).scale(sigma_scalar(params, i, g))
            if lhs != rhs:
                failures.append(f"sigma_{i}({g}): x{i}*{g} != sigma*{g}*x{i}")
        for g in below_y:
            expected_delta = delta_of_x(ctx, i) if g == xi else ctx.zero()
            lhs = ctx.word([yi, g])
            rhs = ctx.word([g, yi]).scale(tau_scalar(params, i, g)) + expected_delta
            if lhs != rhs:
                failures.append(f"tau_{i}/delta_{i}({g}): y{i}*{g} mismatch")
        words = [w for d in range(1, degree_bound + 1) for w in itertools.product(below_y, repeat=d)]
        for w in words:
            if len(w) > degree_bound:
                continue
            d = delta(w)
            if any(m[yi.pos] or any(m[2 * i:]) for m in d.terms):
                failures.append(f"delta_{i}({_w(w)}) leaves the subalgebra below y{i}")
            if all(g in below_x for g in w):
                lhs = ctx.word([xi]) * ctx.word(w)
                if lhs != (ctx.word(w) * ctx.word([xi])).scale(sigma(w)):
                    failures.append(f"sigma_{i} not multiplicative on {_w(w)}")
        for a in words:
            for b in words:
                if len(a) + len(b) > degree_bound:
                    continue
                lhs = delta(a + b)
                rhs = ctx.word(a).scale(tau(a)) * delta(b) + delta(a) * ctx.word(b)
                if lhs != rhs:
                    failures.append(f"delta_{i} derivation law fails on ({_w(a)}, {_w(b)})")
    return failures


def _w(word: Sequence[Generator]) -> str:
    return "*".join(map(str, word))
