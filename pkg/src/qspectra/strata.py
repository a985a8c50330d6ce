"""Admissible sets, the sets N_T, and the H-spectrum poset.

The symbol set P_n = {x_1..x_n, y_1..y_n, Omega_1..Omega_n} is encoded as a
3n-bit integer: bit i-1 is x_i, bit n+i-1 is y_i, bit 2n+i-1 is Omega_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, NamedTuple, Tuple

X, Y, OMEGA = "x", "y", "Omega"
KINDS = (X, Y, OMEGA)


class PSymbol(NamedTuple):
    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    def bit(self, n: int) -> int:
        if not 1 <= self.index <= n:
            raise ValueError(f"index {self.index} out of range for n={n}")
        return 1 << (KINDS.index(self.kind) * n + self.index - 1)


def psymbols(n: int) -> List[PSymbol]:
    """P_n in level order x_1, y_1, Omega_1, x_2, ..."""
    return [PSymbol(k, i) for i in range(1, n + 1) for k in KINDS]


def parse_psymbol(text: str) -> PSymbol:
    for kind in (OMEGA, X, Y):
        if text.startswith(kind) and text[len(kind):].isdigit():
            return PSymbol(kind, int(text[len(kind):]))
    raise ValueError(f"not a symbol of P_n: {text!r}")


@dataclass(frozen=True)
class AdmissibleSet:
    """A subset T of P_n; construct through :func:`admissible_set` to validate."""

    n: int
    bits: int

    def __contains__(self, sym: PSymbol) -> bool:
        return bool(self.bits & sym.bit(self.n))

    def has(self, kind: str, index: int) -> bool:
        """Membership with Omega_0 treated as the constant 0 (always in T)."""
        if kind == OMEGA and index == 0:
            return True
        return PSymbol(kind, index) in self

    def symbols(self) -> List[PSymbol]:
        return [s for s in psymbols(self.n) if s in self]

    def labels(self) -> List[str]:
        return [str(s) for s in self.symbols()]

    def __le__(self, other: "AdmissibleSet") -> bool:  # type: ignore[override]
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "AdmissibleSet") -> bool:  # type: ignore[override]
        return self.bits != other.bits and self <= other

    def level(self, i: int) -> FrozenSet[str]:
        return frozenset(k for k in KINDS if self.has(k, i))

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def from_symbols(n: int, syms) -> int:
    bits = 0
    for s in syms:
        if isinstance(s, str):
            s = parse_psymbol(s)
        bits |= s.bit(n)
    return bits


def is_admissible(n: int, bits: int) -> bool:
    def has(kind: str, i: int) -> bool:
        if kind == OMEGA and i == 0:
            return False
        return bool(bits & PSymbol(kind, i).bit(n))

    if bits >> (3 * n):
        return False
    if (has(X, 1) or has(Y, 1)) != has(OMEGA, 1):
        return False
    for i in range(2, n + 1):
        if (has(X, i) or has(Y, i)) != (has(OMEGA, i) and has(OMEGA, i - 1)):
            return False
    return True


def admissible_set(n: int, syms) -> AdmissibleSet:
    bits = syms if isinstance(syms, int) else from_symbols(n, syms)
    if not is_admissible(n, bits):
        raise ValueError(f"not an admissible set for n={n}: {sorted(map(str, syms)) if not isinstance(syms, int) else bits}")
    return AdmissibleSet(n, bits)


def _level_choices(i: int, prev_omega: bool) -> List[Tuple[str, ...]]:
    # what T may contain at level i given whether Omega_{i-1} lies in T
    if i == 1 or prev_omega:
        return [(), (X, OMEGA), (Y, OMEGA), (X, Y, OMEGA)]
    return [(), (OMEGA,)]


@lru_cache(maxsize=None)
def enumerate_admissible(n: int) -> Tuple[AdmissibleSet, ...]:
    """All admissible sets, built level by level, sorted by bit pattern."""
    if n < 1:
        raise ValueError("n must be positive")
    out: List[int] = []

    def grow(i: int, bits: int, prev_omega: bool) -> None:
        if i > n:
            out.append(bits)
            return
        for choice in _level_choices(i, prev_omega):
            b = bits
            for kind in choice:
                b |= PSymbol(kind, i).bit(n)
            grow(i + 1, b, OMEGA in choice)

    grow(1, 0, False)
    return tuple(AdmissibleSet(n, b) for b in sorted(out))


def n_set(T: AdmissibleSet) -> List[PSymbol]:
    """N_T in level order."""
    out = []
    for i in range(1, T.n + 1):
        flanked = T.has(OMEGA, i - 1) and i > 1 or T.has(OMEGA, i)
        for kind in (X, Y):
            if T.has(kind, i):
                continue
            if i == 1 or flanked:
                out.append(PSymbol(kind, i))
        if not T.has(OMEGA, i):
            out.append(PSymbol(OMEGA, i))
    return out


class HSpecPoset(NamedTuple):
    nodes: Tuple[AdmissibleSet, ...]
    covers: Tuple[Tuple[int, int], ...]  # (lower, upper) node indices

    def bottom(self) -> AdmissibleSet:
        return self.nodes[0]


def hspec_poset(n: int) -> HSpecPoset:
    nodes = enumerate_admissible(n)
    covers = []
    for a, lo in enumerate(nodes):
        for b, hi in enumerate(nodes):
            if lo < hi and not any(lo < mid < hi for mid in nodes):
                covers.append((a, b))
    return HSpecPoset(nodes, tuple(covers))


def separation_witness(T: AdmissibleSet, S: AdmissibleSet) -> PSymbol:
    """An element of S lying in N_T, preferring Omegas, for admissible T < S."""
    if not T < S:
        raise ValueError(f"{T} is not a proper subset of {S}")
    candidates = [s for s in n_set(T) if s in S]
    if not candidates:
        raise RuntimeError(f"no separating element for {T} < {S}")
    omegas = [s for s in candidates if s.kind == OMEGA]
    return (omegas or candidates)[0]


def minimal_generators(T: AdmissibleSet) -> List[PSymbol]:
    """Generators of <T>: drop Omega_i already implied by an x/y at level i or i+1."""
    out = []
    for s in T.symbols():
        if s.kind == OMEGA:
            i = s.index
            implied = T.has(X, i) or T.has(Y, i)
            if i < T.n:
                implied = implied or T.has(X, i + 1) or T.has(Y, i + 1)
            if implied:
                continue
        out.append(s)
    return out
