"""Parameter group and coefficient field.

The scalars q_i, p_i and gamma_{i,j} are modelled as generators of a finitely
generated abelian group: Z^m modulo a user-declared relation lattice. The
coefficient field is Q(zeta_N)(t_1..t_r), where r is the free rank of that
group and N the order of its (cyclic) torsion part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import lattice
from .field import FieldElement, RationalFunctionField

INFINITY = math.inf


def symbol_names(n: int) -> List[str]:
    names = [f"q{i}" for i in range(1, n + 1)] + [f"p{i}" for i in range(1, n + 1)]
    names += [f"g{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return names


class ParamGroup:
    """Z^m modulo a relation lattice, with Smith-normal-form coordinates.

    Immutable: :meth:`add_relation` returns a new group.
    """

    def __init__(self, n: int, relations: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError(f"rank n must be at least 1, got {n}")
        self.n = n
        self.symbols: Tuple[str, ...] = tuple(symbol_names(n))
        self.m = len(self.symbols)
        rels = []
        for row in relations:
            row = tuple(int(x) for x in row)
            if len(row) != self.m:
                raise ValueError(f"relation has length {len(row)}, expected {self.m}")
            if any(row):
                rels.append(row)
        self.relations: Tuple[Tuple[int, ...], ...] = tuple(rels)
        self._index = {s: k for k, s in enumerate(self.symbols)}

        diag, _, v, vinv = lattice.smith_normal_form(self.relations, self.m)
        self.rank = len(diag)
        self.invariants = tuple(diag)
        self._v = v
        self._vinv = vinv
        self.free_rank = self.m - self.rank
        self.torsion = tuple((k, d) for k, d in enumerate(diag) if d > 1)
        self.torsion_order = lattice.lcm(*(d for _, d in self.torsion))
        self._embed_cache: Dict[Tuple[int, ...], FieldElement] = {}

    def __repr__(self) -> str:
        return f"ParamGroup(n={self.n}, relations={list(self.relations)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamGroup) and self.n == other.n and self.relations == other.relations

    def __hash__(self) -> int:
        return hash((self.n, self.relations))

    # construction -----------------------------------------------------
    def add_relation(self, word: Union["UnitScalar", Sequence[int]], order: int = 1) -> "ParamGroup":
        """Impose ``word ** order == 1``."""
        if order < 1:
            raise ValueError("relation order must be positive")
        vec = word.exponents if isinstance(word, UnitScalar) else tuple(word)
        return ParamGroup(self.n, self.relations + (tuple(order * x for x in vec),))

    @cached_property
    def field(self) -> RationalFunctionField:
        names = [f"t{i + 1}" for i in range(self.free_rank)]
        return RationalFunctionField(self.free_rank, self.torsion_order, names)

    # words ------------------------------------------------------------
    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown symbol {name!r} for n={self.n}") from None

    def identity(self) -> "UnitScalar":
        return UnitScalar(self, (0,) * self.m)

    def word(self, powers: Mapping[str, int]) -> "UnitScalar":
        vec = [0] * self.m
        for name, k in powers.items():
            vec[self.index(name)] += k
        return self.canonical(vec)

    def q(self, i: int) -> "UnitScalar":
        return self.word({f"q{i}": 1})

    def p(self, i: int) -> "UnitScalar":
        return self.word({f"p{i}": 1})

    def gamma(self, i: int, j: int) -> "UnitScalar":
        """gamma_{i,j}, with gamma_{j,i} = gamma_{i,j}^-1 and gamma_{i,i} = 1."""
        if i == j:
            return self.identity()
        if i < j:
            return self.word({f"g{i}{j}": 1})
        return self.word({f"g{j}{i}": -1})

    # canonical forms --------------------------------------------------
    def coordinates(self, vec: Sequence[int]) -> List[int]:
        """Smith coordinates, torsion reduced; killed coordinates are zero."""
        c = lattice.vecmat(vec, self._v)
        for k, d in enumerate(self.invariants):
            c[k] = c[k] % d
        return c

    def canonical(self, vec: Sequence[int]) -> "UnitScalar":
        if len(vec) != self.m:
            raise ValueError(f"exponent vector has length {len(vec)}, expected {self.m}")
        c = self.coordinates(vec)
        return UnitScalar(self, tuple(lattice.vecmat(c, self._vinv)))

    def order_of(self, u: Union["UnitScalar", Sequence[int]]) -> Union[int, float]:
        vec = u.exponents if isinstance(u, UnitScalar) else u
        c = self.coordinates(vec)
        if any(c[self.rank:]):
            return INFINITY
        out = 1
        for k, d in self.torsion:
            out = lattice.lcm(out, d // math.gcd(c[k], d))
        return out

    # field embedding --------------------------------------------------
    def embed(self, u: Union["UnitScalar", Sequence[int]]) -> FieldElement:
        vec = tuple(u.exponents if isinstance(u, UnitScalar) else u)
        hit = self._embed_cache.get(vec)
        if hit is not None:
            return hit
        c = self.coordinates(vec)
        free = tuple(c[self.rank:])
        N = self.torsion_order
        k = sum(c[j] * (N // d) for j, d in self.torsion) % N
        out = self.field.monomial(free, k)
        self._embed_cache[vec] = out
        return out

    def unembed(self, x: FieldElement) -> Optional["UnitScalar"]:
        """The unit scalar whose image is ``x``, or None when ``x`` is not one."""
        hit = x.as_unit()
        if hit is None:
            return None
        free, k = hit
        if not self.is_cyclic():
            return None
        c = [0] * self.m
        c[self.rank:] = list(free)
        if self.torsion:
            j, d = self.torsion[0]
            c[j] = k
        elif k:
            return None
        return UnitScalar(self, tuple(lattice.vecmat(c, self._vinv)))

    def is_cyclic(self) -> bool:
        return len(self.torsion) <= 1

    def validate_constraints(self) -> List[str]:
        """Violations of the standing hypotheses; an empty list means ok."""
        problems = []
        if not self.is_cyclic():
            orders = " x ".join(f"Z/{d}" for _, d in self.torsion)
            problems.append(
                f"torsion subgroup {orders} is not cyclic, so no field realizes these relations"
            )
        for i in range(1, self.n + 1):
            u = self.p(i) / self.q(i)
            if self.order_of(u) != INFINITY:
                problems.append(f"i={i}: p{i}*q{i}^-1 has finite order {self.order_of(u)}")
        return problems


@dataclass(frozen=True)
class UnitScalar:
    """A parameter monomial, stored as its canonical exponent vector."""

    group: ParamGroup = field(compare=False, hash=False, repr=False)
    exponents: Tuple[int, ...]

    def __mul__(self, other: "UnitScalar") -> "UnitScalar":
        return self.group.canonical([a + b for a, b in zip(self.exponents, other.exponents)])

    def __truediv__(self, other: "UnitScalar") -> "UnitScalar":
        return self.group.canonical([a - b for a, b in zip(self.exponents, other.exponents)])

    def __pow__(self, k: int) -> "UnitScalar":
        return self.group.canonical([k * a for a in self.exponents])

    def inverse(self) -> "UnitScalar":
        return self.group.canonical([-a for a in self.exponents])

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def embed(self) -> FieldElement:
        return self.group.embed(self)

    def order(self) -> Union[int, float]:
        return self.group.order_of(self)

    def __str__(self) -> str:
        return format_word(self.group.symbols, self.exponents)

    __repr__ = __str__


def format_word(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, exps) if k]
    return "*".join(parts) if parts else "1"


def build_param_group(n: int) -> ParamGroup:
    return ParamGroup(n)


def add_relation(g: ParamGroup, word: Union[UnitScalar, Sequence[int]], order: int = 1) -> ParamGroup:
    return g.add_relation(word, order)


def canonicalize(g: ParamGroup, u: Sequence[int]) -> UnitScalar:
    return g.canonical(u)


def order_of(g: ParamGroup, u) -> Union[int, float]:
    return g.order_of(u)


def embed(g: ParamGroup, u) -> FieldElement:
    return g.embed(u)


def validate_constraints(g: ParamGroup) -> List[str]:
    return g.validate_constraints()
