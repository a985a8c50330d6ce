import json
from pathlib import Path

import pytest

from qspectra import lattice
from qspectra.config import build_group

FIXTURES = Path(__file__).parent / "fixtures"

# lines recorded by the acceptance module, echoed after the run
ACCEPTANCE_LINES = []


def group(n, *relations):
    return build_group(n, list(relations))


def same_lattice(a, b, k):
    return lattice.hnf(a, k) == lattice.hnf(b, k)


def in_lattice(basis, v):
    k = len(v)
    return lattice.hnf(list(basis) + [list(v)], k) == lattice.hnf(basis, k)


@pytest.fixture(scope="session")
def k2_fixture():
    with open(FIXTURES / "k2_strata.json", encoding="utf-8") as fh:
        return json.load(fh)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
