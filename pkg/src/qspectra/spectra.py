"""Stratum centers and primitive-ideal families.

For each admissible set T the quotient K_n/<T> is localized at the normal
elements of N_T. The center of that localization is spanned by Laurent
monomials in a toral basis B_T; a monomial with exponent vector e is central
exactly when every commutation scalar it picks up collapses to 1 modulo the
declared parameter relations. That condition is an integer kernel problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import lattice
from .algebra import AlgebraContext, Generator, NCPoly, is_normal, scalar_commutes
from .scalars import ParamGroup, UnitScalar
from .strata import OMEGA, X, Y, AdmissibleSet, PSymbol, enumerate_admissible, minimal_generators, n_set


class ConstraintError(ValueError):
    """Raised when the parameter relations break the standing hypotheses."""

    def __init__(self, problems: Sequence[str]):
        super().__init__("; ".join(problems))
        self.problems = list(problems)


class InvariantError(RuntimeError):
    """A toral-basis invariant failed; this points at a bug, not bad input."""


@dataclass
class ToralBasis:
    T: AdmissibleSet
    labels: List[PSymbol]
    elements: List[NCPoly]
    ctx: AlgebraContext = field(repr=False)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass
class CommutationMatrix:
    rows: List[PSymbol]
    cols: List[Generator]
    entries: List[List[UnitScalar]]  # b * g = entries[b][g] * g * b


@dataclass
class CenterLattice:
    basis: List[List[int]]  # HNF rows over the toral basis
    labels: List[PSymbol]

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass
class PrimitiveFamily:
    T: AdmissibleSet
    generators: List[Tuple[str, str]]  # (word, normalizing scalar)
    ideal: str
    parameters: List[str]

    @property
    def description(self) -> str:
        if not self.parameters:
            return self.ideal
        return f"{self.ideal} for all nonzero {', '.join(self.parameters)} in k"


@dataclass
class StratumReport:
    T: AdmissibleSet
    n_t: List[PSymbol]
    toral_basis: ToralBasis
    matrix: CommutationMatrix
    center: CenterLattice
    family: PrimitiveFamily

    def to_dict(self) -> Dict[str, object]:
        return {
            "T": self.T.labels(),
            "N_T": [str(s) for s in self.n_t],
            "toral_basis": [str(s) for s in self.toral_basis.labels],
            "center_rank": self.center.rank,
            "center_generators": [{"word": w, "scalar": s} for w, s in self.family.generators],
            "primitive_family": self.family.description,
        }


def _omega_image_vanishes(T: AdmissibleSet, i: int) -> bool:
    return i == 0 or T.has(OMEGA, i)


def toral_basis(T: AdmissibleSet, ctx: AlgebraContext) -> ToralBasis:
    """N_T minus the members that are already monomials in the others.

    Omega_i is dropped when x_i, y_i survive and Omega_{i-1} vanishes, since
    then it is a scalar times y_i x_i. When Omega_i lies in T while x_i, y_i
    survive, x_i y_i is a scalar times Omega_{i-1}, so y_i is dropped.
    """
    labels: List[PSymbol] = []
    for s in n_set(T):
        i = s.index
        survives = not (T.has(X, i) or T.has(Y, i))
        if s.kind == OMEGA and survives and _omega_image_vanishes(T, i - 1):
            continue
        if s.kind == Y and survives and T.has(OMEGA, i):
            continue
        labels.append(s)
    elements = [ctx.symbol(s) for s in labels]
    for s, e in zip(labels, elements):
        if e.is_zero():
            raise InvariantError(f"{s} vanishes modulo <{T}>")
        if is_normal(e, ctx) is None:
            raise InvariantError(f"{s} is not normal modulo <{T}>")
        if s.kind == OMEGA and len(e.terms) < 2:
            raise InvariantError(f"{s} is a monomial modulo <{T}> and should have been dropped")
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            if scalar_commutes(elements[a], elements[b]) is None:
                raise InvariantError(f"{labels[a]} and {labels[b]} do not commute up to scalar")
    return ToralBasis(T, labels, elements, ctx)


def commutation_matrix(tb: ToralBasis, ctx: AlgebraContext) -> CommutationMatrix:
    cols = ctx.survivors()
    entries = []
    for s, e in zip(tb.labels, tb.elements):
        row = []
        for g in cols:
            c = scalar_commutes(e, ctx.gen(g))
            if c is None:
                raise InvariantError(f"{s} fails to scalar-commute with {g}")
            row.append(c)
        entries.append(row)
    return CommutationMatrix(list(tb.labels), cols, entries)


def center_lattice(cm: CommutationMatrix, params: ParamGroup) -> CenterLattice:
    """HNF basis of {e : prod_b c(b, g)^e_b == 1 in the parameter group, all g}."""
    k = len(cm.rows)
    m = params.m
    blocks = len(cm.cols)
    if k == 0:
        return CenterLattice([], [])
    width = m * blocks
    rows = [[x for c in row for x in c.exponents] for row in cm.entries]
    for b in range(blocks):
        for rel in params.relations:
            r = [0] * width
            r[b * m:(b + 1) * m] = rel
            rows.append(r)
    kernel = lattice.left_kernel(rows, width)
    projected = [v[:k] for v in kernel if any(v[:k])]
    return CenterLattice(lattice.hnf(projected, k), list(cm.rows))


def _power(tb: ToralBasis, exps: Sequence[int]) -> NCPoly:
    out = tb.ctx.one()
    for e, k in zip(tb.elements, exps):
        for _ in range(k):
            out = out * e
    return out


def check_centrality(tb: ToralBasis, exps: Sequence[int]) -> bool:
    """Multiply-level test that the Laurent monomial u*v^-1 is central.

    With u*v = lam*v*u, centrality of u v^-1 against g is u*g*v == lam*v*g*u.
    """
    ctx = tb.ctx
    u = _power(tb, [max(e, 0) for e in exps])
    v = _power(tb, [max(-e, 0) for e in exps])
    lam = scalar_commutes(u, v)
    if lam is None:
        return False
    for g in ctx.survivors():
        gp = ctx.gen(g)
        if u * gp * v != (v * gp * u).scale(lam):
            return False
    return True


def _word(labels: Sequence[PSymbol], exps: Sequence[int], positive: bool = True) -> str:
    parts = []
    for s, e in zip(labels, exps):
        k = e if positive else -e
        if k > 0:
            parts.append(str(s) if k == 1 else f"{s}^{k}")
    return "*".join(parts) if parts else "1"


def laurent_word(labels: Sequence[PSymbol], exps: Sequence[int]) -> str:
    parts = [str(s) if e == 1 else f"{s}^{e}" for s, e in zip(labels, exps) if e]
    return "*".join(parts) if parts else "1"


def _normalizing_scalar(ctx: AlgebraContext, labels: Sequence[PSymbol], exps: Sequence[int]) -> str:
    """Scalar relating the ordered word to its PBW monomial, when it is one."""
    if any(e < 0 for e in exps) or any(s.kind == OMEGA for s, e in zip(labels, exps) if e):
        return "1"
    gens = [Generator(s.kind, s.index) for s, e in zip(labels, exps) for _ in range(e)]
    w = ctx.word(gens)
    if len(w.terms) != 1:
        return "1"
    (_, c), = w.terms.items()
    u = ctx.params.unembed(c)
    return str(u) if u is not None else "1"


def primitive_families(
    T: AdmissibleSet, center: CenterLattice, ctx: Optional[AlgebraContext] = None
) -> PrimitiveFamily:
    base = [str(s) for s in minimal_generators(T)]
    gens: List[Tuple[str, str]] = []
    relations = []
    for j, row in enumerate(center.basis, start=1):
        word = laurent_word(center.labels, row)
        scalar = _normalizing_scalar(ctx, center.labels, row) if ctx is not None else "1"
        gens.append((word, scalar))
        pos, neg = _word(center.labels, row), _word(center.labels, row, positive=False)
        alpha = f"a{j}"
        relations.append(f"{pos} - {alpha}" if neg == "1" else f"{pos} - {alpha}*{neg}")
    body = base + relations
    ideal = "<" + (", ".join(body) if body else "0") + ">"
    return PrimitiveFamily(T, gens, ideal, [f"a{j}" for j in range(1, len(relations) + 1)])


def stratum_report(T: AdmissibleSet, params: ParamGroup, verify: bool = True) -> StratumReport:
    ctx = AlgebraContext(params, T)
    tb = toral_basis(T, ctx)
    cm = commutation_matrix(tb, ctx)
    cl = center_lattice(cm, params)
    if verify:
        for row in cl.basis:
            if not check_centrality(tb, row):
                raise InvariantError(f"center generator {laurent_word(cl.labels, row)} is not central")
    fam = primitive_families(T, cl, ctx)
    return StratumReport(T, n_set(T), tb, cm, cl, fam)


def full_report(params: ParamGroup, verify: bool = True) -> List[StratumReport]:
    problems = params.validate_constraints()
    if problems:
        raise ConstraintError(problems)
    return [stratum_report(T, params, verify) for T in enumerate_admissible(params.n)]
