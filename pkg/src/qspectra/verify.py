"""Verification suites run by ``qspectra --verify``.

Each suite checks a family of exact identities and returns a
:class:`SuiteResult` whose log names every statement it checked.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .algebra import AlgebraContext, NCPoly, generators, is_normal, trace_check, verify_skew_tower
from .scalars import ParamGroup
from .spectra import InvariantError, check_centrality, stratum_report
from .strata import enumerate_admissible, n_set, separation_witness


@dataclass
class SuiteResult:
    name: str
    description: str = ""
    checked: int = 0
    log: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, statement: str, holds: bool) -> None:
        self.checked += 1
        self.log.append(("ok    " if holds else "FAIL  ") + statement)
        if not holds:
            self.failures.append(statement)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}: {self.checked} checks, {len(self.failures)} failures"


def commutation_suite(params: ParamGroup, degree: int = 3) -> SuiteResult:
    """Omega_i against every generator and every Omega_j, plus the two ladder identities."""
    res = SuiteResult("commutation")
    ctx = AlgebraContext(params)
    n = params.n
    for i in range(1, n + 1):
        om = ctx.omega(i)
        for j in range(1, n + 1):
            xj, yj = ctx.x(j), ctx.y(j)
            if i < j:
                cx, cy = params.p(j).inverse(), params.p(j)
            else:
                cx, cy = params.q(j).inverse(), params.q(j)
            res.check(f"Omega{i}*x{j} = {cx}*x{j}*Omega{i}", om * xj == (xj * om).scale(cx))
            res.check(f"Omega{i}*y{j} = {cy}*y{j}*Omega{i}", om * yj == (yj * om).scale(cy))
            oj = ctx.omega(j)
            res.check(f"Omega{i}*Omega{j} = Omega{j}*Omega{i}", om * oj == oj * om)
        xi, yi = ctx.x(i), ctx.y(i)
        prev = ctx.omega(i - 1) if i > 1 else ctx.zero()
        res.check(
            f"Omega{i - 1} = x{i}*y{i} - q{i}*y{i}*x{i}",
            prev == xi * yi - (yi * xi).scale(params.q(i)),
        )
        res.check(
            f"Omega{i} = x{i}*y{i} - p{i}*y{i}*x{i}",
            om == xi * yi - (yi * xi).scale(params.p(i)),
        )
    res.description = f"Omega commutation and ladder identities, n={n}"
    return res


def tower_suite(params: ParamGroup, degree: int = 3) -> SuiteResult:
    res = SuiteResult("tower")
    failures = verify_skew_tower(params, degree)
    res.check(f"sigma, tau and delta formulas on generators and words of degree <= {degree}", not failures)
    res.failures.extend(failures)
    res.description = f"iterated skew-polynomial presentation, n={params.n}, words up to degree {degree}"
    return res


def trace_suite(params: ParamGroup, degree: int = 3) -> SuiteResult:
    res = SuiteResult("trace")
    for T in enumerate_admissible(params.n):
        bad = trace_check(T, params)
        detail = "" if bad is None else f" (fails at {bad})"
        res.check(f"<{T}> contains exactly the symbols of T{detail}", bad is None)
    res.description = f"<T> meets the symbol set exactly in T, all admissible T at n={params.n}"
    return res


def normality_suite(params: ParamGroup, degree: int = 3) -> SuiteResult:
    res = SuiteResult("normality")
    for T in enumerate_admissible(params.n):
        ctx = AlgebraContext(params, T)
        for s in n_set(T):
            e = ctx.symbol(s)
            res.check(f"{s} nonzero modulo <{T}>", not e.is_zero())
            res.check(f"{s} normal modulo <{T}>", not e.is_zero() and is_normal(e, ctx) is not None)
            res.check(f"{s} not in <{T}>", s not in T)
    res.description = f"every member of N_T is nonzero and normal modulo <T>, n={params.n}"
    return res


def separation_suite(params: ParamGroup, degree: int = 3) -> SuiteResult:
    res = SuiteResult("separation")
    sets = enumerate_admissible(params.n)
    for T, S in itertools.product(sets, sets):
        if not T < S:
            continue
        try:
            w = separation_witness(T, S)
        except RuntimeError:
            res.check(f"witness for {T} < {S}", False)
            continue
        res.check(f"{w} lies in {S} and in N_{T}", w in S and w in n_set(T))
    res.description = f"each comparable pair T < S has a witness in S and N_T, n={params.n}"
    return res


def random_poly(ctx: AlgebraContext, rng: random.Random, degree: int = 3, terms: int = 3) -> NCPoly:
    gens = [ctx.gen(g) for g in generators(ctx.params.n)]
    out = ctx.zero()
    for _ in range(terms):
        d = rng.randint(0, degree)
        w = ctx.one()
        for _ in range(d):
            w = w * rng.choice(gens)
        out = out + w.scale(rng.choice([-3, -2, -1, 1, 2, 5]))
    return out


def associativity_suite(params: ParamGroup, degree: int = 3, samples: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("associativity")
    ctx = AlgebraContext(params)
    rng = random.Random(seed)
    for k in range(samples):
        a, b, c = (random_poly(ctx, rng, degree) for _ in range(3))
        res.check(f"triple #{k}: (ab)c = a(bc)", (a * b) * c == a * (b * c))
    res.description = f"{samples} random triples of degree <= {degree}, n={params.n}, seed={seed}"
    return res


def centrality_suite(params: ParamGroup, degree: int = 3) -> SuiteResult:
    res = SuiteResult("centrality")
    for T in enumerate_admissible(params.n):
        try:
            rep = stratum_report(T, params, verify=False)
        except InvariantError as exc:
            res.check(f"toral basis for {T}: {exc}", False)
            continue
        for row in rep.center.basis:
            res.check(
                f"center generator {row} of {T} commutes with every surviving generator",
                check_centrality(rep.toral_basis, row),
            )
        res.check(f"rank of center for {T} is at most n+1", rep.center.rank <= params.n + 1)
    res.description = f"center generators pass the multiply-level check, n={params.n}"
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "commutation": commutation_suite,
    "tower": tower_suite,
    "trace": trace_suite,
    "normality": normality_suite,
    "separation": separation_suite,
    "associativity": associativity_suite,
    "centrality": centrality_suite,
}


def run_suites(names, params: ParamGroup, degree: int = 3) -> List[SuiteResult]:
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)} or all")
    return [SUITES[s](params, degree) for s in names]
