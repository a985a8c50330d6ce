from hypothesis import given, settings, strategies as st

from qspectra import lattice
from qspectra.lattice import hnf, hnf_with_transform, left_kernel, matmul, smith_normal_form, vecmat, xgcd

small = st.integers(-9, 9)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=max_rows).map(
            lambda rows: (rows, c)
        )
    )


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


@given(small, small)
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


@given(matrices())
def test_hnf_transform_is_unimodular(mc):
    rows, c = mc
    h, u = hnf_with_transform(rows, c)
    assert matmul(u, rows) == h
    assert abs(det(u)) == 1


@given(matrices())
def test_hnf_shape(mc):
    rows, c = mc
    h = hnf(rows, c)
    last = -1
    for r in h:
        piv = next(j for j, x in enumerate(r) if x)
        assert piv > last and r[piv] > 0
        for above in h[: h.index(r)]:
            assert 0 <= above[piv] < r[piv]
        last = piv


@given(matrices())
def test_hnf_is_canonical_under_row_shuffles(mc):
    rows, c = mc
    shuffled = rows[::-1] + [[a + b for a, b in zip(rows[0], rows[-1])]]
    assert hnf(rows, c) == hnf(shuffled, c)


@given(matrices())
def test_left_kernel(mc):
    rows, c = mc
    ker = left_kernel(rows, c)
    for v in ker:
        assert vecmat(v, rows) == [0] * c
    rank = len(hnf(rows, c))
    assert len(ker) == len(rows) - rank


def test_left_kernel_brute_force():
    rows = [[2, 4], [1, 2], [3, 6]]
    ker = left_kernel(rows, 2)
    found = {
        (a, b, c)
        for a in range(-3, 4)
        for b in range(-3, 4)
        for c in range(-3, 4)
        if vecmat([a, b, c], rows) == [0, 0]
    }
    spanned = {
        tuple(s * x + t * y for x, y in zip(ker[0], ker[1]))
        for s in range(-8, 9)
        for t in range(-8, 9)
    }
    assert found <= spanned


@settings(max_examples=150)
@given(matrices())
def test_smith_normal_form(mc):
    rows, c = mc
    d, u, v, vinv = smith_normal_form(rows, c)
    prod = matmul(matmul(u, rows), v)
    for i, row in enumerate(prod):
        for j, x in enumerate(row):
            assert x == (d[i] if i == j and i < len(d) else 0)
    assert all(x > 0 for x in d)
    assert all(d[k + 1] % d[k] == 0 for k in range(len(d) - 1))
    assert matmul(v, vinv) == lattice.identity(c)
    assert abs(det(u)) == 1


def test_smith_with_repeated_divisible_entries():
    # equal pivots used to make the elimination swap rows forever
    rows = [[3, 3, 0], [3, 0, 3], [0, 3, 3]]
    d, _, _, _ = smith_normal_form(rows, 3)
    assert d == [3, 3, 6]


def test_lcm():
    assert lattice.lcm() == 1
    assert lattice.lcm(4, 6, 10) == 60
