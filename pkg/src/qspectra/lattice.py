"""Integer lattice helpers: Hermite and Smith normal forms, integer kernels.

Matrices are lists of rows of Python ints. Nothing here is clever; the
matrices that show up in practice have at most a few dozen rows.
"""

from __future__ import annotations

from math import gcd
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for row in a
    ]


def vecmat(v: Sequence[int], m: Sequence[Sequence[int]]) -> List[int]:
    """Row vector times matrix."""
    if not m:
        return []
    return [sum(v[k] * m[k][j] for k in range(len(m))) for j in range(len(m[0]))]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf_with_transform(rows: Sequence[Sequence[int]], ncols: int | None = None) -> Tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``. ``H`` is in
    row echelon form with positive pivots and the entries above every pivot
    reduced into ``[0, pivot)``. Zero rows are kept at the bottom so that the
    matching rows of ``U`` span the left kernel of ``A``.
    """
    h = [list(r) for r in rows]
    m = len(h)
    n = ncols if ncols is not None else (len(h[0]) if h else 0)
    u = identity(m)
    pivot_row = 0
    for col in range(n):
        if pivot_row >= m:
            break
        # gcd-combine everything below into pivot_row
        for i in range(pivot_row + 1, m):
            if h[i][col] == 0:
                continue
            a, b = h[pivot_row][col], h[i][col]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            r1 = [s * x + t * y for x, y in zip(h[pivot_row], h[i])]
            r2 = [-bg * x + ag * y for x, y in zip(h[pivot_row], h[i])]
            h[pivot_row], h[i] = r1, r2
            u1 = [s * x + t * y for x, y in zip(u[pivot_row], u[i])]
            u2 = [-bg * x + ag * y for x, y in zip(u[pivot_row], u[i])]
            u[pivot_row], u[i] = u1, u2
        p = h[pivot_row][col]
        if p == 0:
            continue
        if p < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
            p = -p
        for i in range(pivot_row):
            q = h[i][col] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return h, u


def hnf(rows: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Nonzero rows of the Hermite normal form; a canonical lattice basis."""
    h, _ = hnf_with_transform(rows, ncols)
    return [r for r in h if any(r)]


def left_kernel(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of ``{v in Z^m : v @ A = 0}`` for an ``m x ncols`` matrix ``A``."""
    h, u = hnf_with_transform(rows, ncols)
    return [u[i] for i, r in enumerate(h) if not any(r)]


def _pivot_coeffs(p: int, b: int) -> Tuple[int, int, int]:
    # like xgcd, but leaves the pivot alone when it already divides b;
    # plain xgcd may answer (0, 1) there, which swaps instead of clearing
    if b % p == 0:
        return abs(p), (1 if p > 0 else -1), 0
    return xgcd(p, b)


def smith_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[List[int], Matrix, Matrix, Matrix]:
    """Smith normal form with column transforms.

    Returns ``(d, U, V, Vinv)`` where ``U @ A @ V`` is diagonal with entries
    ``d[0] | d[1] | ...`` (all positive, ``len(d)`` = rank) and ``Vinv`` is
    the inverse of ``V``.
    """
    a = [list(r) for r in rows]
    m, n = len(a), ncols
    u = identity(m)
    v = identity(n)
    vinv = identity(n)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_combine(i: int, j: int, s: int, t: int, x: int, y: int) -> None:
        # new col i = s*ci + t*cj ; new col j = x*ci + y*cj, with s*y - t*x = 1
        for mat in (a, v):
            for row in mat:
                ci, cj = row[i], row[j]
                row[i], row[j] = s * ci + t * cj, x * ci + y * cj
        # inverse acts on rows of vinv: [[s, x], [t, y]]^-1 = [[y, -x], [-t, s]]
        ri, rj = vinv[i], vinv[j]
        vinv[i] = [y * p - x * q for p, q in zip(ri, rj)]
        vinv[j] = [-t * p + s * q for p, q in zip(ri, rj)]

    def row_combine(i: int, j: int, s: int, t: int, x: int, y: int) -> None:
        for mat in (a, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [s * p + t * q for p, q in zip(ri, rj)]
            mat[j] = [x * p + y * q for p, q in zip(ri, rj)]

    diag: List[int] = []
    k = 0
    while k < min(m, n):
        # find a nonzero entry of minimal absolute value in the remaining block
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(k, best[0])
        swap_cols(k, best[1])
        done = False
        while not done:
            done = True
            for i in range(k + 1, m):
                if a[i][k]:
                    p, b = a[k][k], a[i][k]
                    g, s, t = _pivot_coeffs(p, b)
                    row_combine(k, i, s, t, -b // g, p // g)
            for j in range(k + 1, n):
                if a[k][j]:
                    p, b = a[k][k], a[k][j]
                    g, s, t = _pivot_coeffs(p, b)
                    col_combine(k, j, s, t, -b // g, p // g)
                    done = False
            if any(a[i][k] for i in range(k + 1, m)):
                done = False
                continue
            # enforce divisibility of the remaining block by the pivot
            p = a[k][k]
            bad = next(
                ((i, j) for i in range(k + 1, m) for j in range(k + 1, n) if a[i][j] % p),
                None,
            )
            if bad is not None:
                row_combine(k, bad[0], 1, 1, 0, 1)
                done = False
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]
        diag.append(a[k][k])
        k += 1
    return diag, u, v, vinv


def lcm(*values: int) -> int:
    out = 1
    for x in values:
        out = out * x // gcd(out, x)
    return out
