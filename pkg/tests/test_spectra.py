import itertools

import pytest

from qspectra.algebra import AlgebraContext
from qspectra.scalars import ParamGroup
from qspectra.spectra import (
    ConstraintError,
    center_lattice,
    check_centrality,
    commutation_matrix,
    full_report,
    stratum_report,
    toral_basis,
)
from qspectra.strata import admissible_set, enumerate_admissible, n_set
from conftest import group, in_lattice, same_lattice


def basis_labels(T, params):
    return [str(s) for s in toral_basis(T, AlgebraContext(params, T)).labels]


def test_toral_basis_examples():
    g = ParamGroup(2)
    assert basis_labels(admissible_set(2, ["y1", "Omega1", "y2", "Omega2"]), g) == ["x1", "x2"]
    assert basis_labels(admissible_set(2, []), g) == ["x1", "y1", "Omega2"]
    assert basis_labels(admissible_set(2, ["x1", "y1", "Omega1"]), g) == ["x2", "y2"]
    assert basis_labels(admissible_set(2, ["Omega2"]), g) == ["x1", "y1", "x2"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_toral_basis_is_inside_n_set(n):
    g = ParamGroup(n)
    for T in enumerate_admissible(n):
        labels = basis_labels(T, g)
        assert set(labels) <= {str(s) for s in n_set(T)}


def test_commutation_matrix_entries():
    g = ParamGroup(2)
    T = admissible_set(2, ["y1", "Omega1", "y2", "Omega2"])
    ctx = AlgebraContext(g, T)
    cm = commutation_matrix(toral_basis(T, ctx), ctx)
    col = {str(c): k for k, c in enumerate(cm.cols)}
    assert cm.entries[0][col["x2"]] == g.q(1) / g.p(2) * g.gamma(1, 2)

    T = admissible_set(2, [])
    ctx = AlgebraContext(g, T)
    cm = commutation_matrix(toral_basis(T, ctx), ctx)
    col = {str(c): k for k, c in enumerate(cm.cols)}
    om2 = [str(r) for r in cm.rows].index("Omega2")
    assert cm.entries[om2][col["x2"]] == g.q(2).inverse()
    assert cm.entries[om2][col["y2"]] == g.q(2)


def test_golden_k2(k2_fixture):
    for case in k2_fixture["cases"]:
        params = group(2, *case["relations"])
        T = admissible_set(2, case["T"])
        rep = stratum_report(T, params)
        labels = [str(s) for s in rep.toral_basis.labels]
        k = len(labels)
        assert labels == case["basis"], case
        assert rep.center.rank == len(case["lattice"]), case
        assert same_lattice(rep.center.basis, case["lattice"], k), case
        assert [w for w, _ in rep.family.generators] == case["words"], case
        assert rep.family.ideal == case["ideal"], case


def test_generic_k2_ranks(k2_fixture):
    reports = {tuple(r.T.labels()): r for r in full_report(ParamGroup(2))}
    generic = [c for c in k2_fixture["cases"] if not c["relations"]]
    assert len(generic) == 14
    for case in generic:
        assert reports[tuple(case["T"])].center.rank == len(case["lattice"])


REGIMES_2 = [
    (),
    ("g12 = 1", "order(q1*p2^-1) = 3"),
    ("q1 = 1", "p2 = 1", "g12 = 1"),
    ("q1 = 1", "q2 = 1"),
    ("order(g12) = 2", "q1 = 1"),
    ("q1 = 1", "g12 = 1", "q2 = 1"),
]


def brute_center(rep, box):
    k = len(rep.toral_basis)
    return [
        e for e in itertools.product(range(-box, box + 1), repeat=k)
        if any(e) and check_centrality(rep.toral_basis, e)
    ]


@pytest.mark.parametrize("relations", REGIMES_2)
def test_lattice_against_brute_force(relations):
    """Kernel route vs. direct multiplication over a box of exponent vectors."""
    params = group(2, *relations)
    for T in enumerate_admissible(2):
        rep = stratum_report(T, params)
        k = len(rep.toral_basis)
        if k == 0:
            continue
        box = 3 if k <= 2 else 2
        central = brute_center(rep, box)
        for e in itertools.product(range(-box, box + 1), repeat=k):
            assert in_lattice(rep.center.basis, e) == (not any(e) or e in central), (T, e)


REGIMES_3 = [
    (),
    ("p1 = 1", "p2 = 1", "p3 = 1"),
    ("q1 = 1", "q2 = 1", "q3 = 1", "g12 = 1", "g13 = 1", "g23 = 1"),
    ("g12 = 1", "g13 = 1", "g23 = 1", "order(q1*p2^-1) = 3"),
    ("q1 = 1", "p2 = 1", "p3 = 1", "g12 = 1", "g23 = 1"),
]


@pytest.mark.parametrize("relations", REGIMES_3)
def test_rank_bound_n3(relations):
    params = group(3, *relations)
    for rep in full_report(params):
        assert rep.center.rank <= 4


def test_center_generators_are_central():
    params = group(3, "q1 = 1", "q2 = 1", "q3 = 1", "g12 = 1", "g13 = 1", "g23 = 1")
    for rep in full_report(params, verify=False):
        for row in rep.center.basis:
            assert check_centrality(rep.toral_basis, row)


def test_non_central_vector_is_rejected():
    params = ParamGroup(2)
    T = admissible_set(2, ["y1", "Omega1", "y2", "Omega2"])
    rep = stratum_report(T, params)
    assert not check_centrality(rep.toral_basis, (1, 0))


def test_constraint_violation():
    with pytest.raises(ConstraintError) as exc:
        full_report(group(2, "q1 = p1"))
    assert exc.value.problems[0].startswith("i=1")


def test_full_report_counts():
    assert len(full_report(ParamGroup(1))) == 4
    assert len(full_report(ParamGroup(2))) == 14


def test_unconditional_strata():
    ideals = {r.family.ideal for r in full_report(ParamGroup(2))}
    for ideal in ["<x1, y1, x2, y2>", "<x1, y1, y2, x2 - a1>", "<x1, y1, x2, y2 - a1>",
                  "<y1, x2, y2, x1 - a1>", "<x1, x2, y2, y1 - a1>"]:
        assert ideal in ideals


def test_heisenberg_report_runs():
    from qspectra.config import preset_relations

    params = group(2, *preset_relations("heisenberg", 2))
    reps = full_report(params)
    assert len(reps) == 14
    assert all(r.center.rank <= 3 for r in reps)


def test_report_dict_key_order():
    rep = full_report(ParamGroup(1))[1]
    assert list(rep.to_dict()) == [
        "T", "N_T", "toral_basis", "center_rank", "center_generators", "primitive_family",
    ]


def test_center_lattice_empty_basis():
    g = ParamGroup(2)
    T = admissible_set(2, ["x1", "y1", "Omega1", "x2", "y2", "Omega2"])
    ctx = AlgebraContext(g, T)
    cm = commutation_matrix(toral_basis(T, ctx), ctx)
    assert center_lattice(cm, g).rank == 0
