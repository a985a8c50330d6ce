import json
import subprocess
import sys

import pytest

from qspectra.cli import main, run_report, run_verify
from qspectra.config import Config, parse_config


def test_report_n1(capsys):
    assert main(["--n", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert list(data) == ["n", "relations", "strata"]
    assert data["n"] == 1 and data["relations"] == []
    assert sorted(map(tuple, (s["T"] for s in data["strata"]))) == sorted(
        [(), ("x1", "Omega1"), ("y1", "Omega1"), ("x1", "y1", "Omega1")]
    )


def test_report_n2_counts(capsys):
    assert main(["--n", "2", "--report"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["strata"]) == 14


def test_constraint_violation_exit_code(capsys):
    assert main(["--n", "2", "--relation", "q1 = p1"]) == 2
    err = capsys.readouterr().err
    assert "i=1" in err


def test_bad_relation_exit_code(capsys):
    assert main(["--n", "2", "--relation", "q7 = 1"]) == 2
    assert "q7" in capsys.readouterr().err


def test_missing_n(capsys):
    assert main([]) == 2


def test_config_file_and_overrides(tmp_path, capsys):
    path = tmp_path / "k2.cfg"
    path.write_text('n = 2\nrelations = ["g12 = 1"]\n', encoding="utf-8")
    out = tmp_path / "report.json"
    code = main(["--config", str(path), "--relation", "order(q1*p2^-1) = 3", "--out", str(out)])
    assert code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["relations"] == ["g12 = 1", "order(q1*p2^-1) = 3"]
    by_t = {tuple(s["T"]): s for s in data["strata"]}
    s = by_t[("y1", "Omega1", "y2", "Omega2")]
    assert s["center_rank"] == 2
    assert [g["word"] for g in s["center_generators"]] == ["x1^3", "x2^3"]


def test_text_format(capsys):
    assert main(["--n", "2", "--format", "text", "--relation", "q1 = 1", "--relation", "q2 = 1"]) == 0
    out = capsys.readouterr().out
    assert "T = {y1, Omega1}" in out
    assert "* <y1, x2*y2 - a1> is primitive for all nonzero a1 in k" in out
    assert "* <0> is primitive" not in out or "T = empty set" in out


def test_determinism():
    cfg = parse_config('n = 2\nrelations = ["q1 = 1", "p2 = 1"]')
    a = run_report(cfg)[1]
    b = run_report(cfg)[1]
    assert a == b


@pytest.mark.parametrize("suite", ["commutation", "trace", "tower", "normality", "separation"])
def test_verify_suites_pass(suite, capsys):
    assert main(["--n", "2", "--verify", suite]) == 0
    assert "all suites passed" in capsys.readouterr().out


def test_verify_unknown_suite(capsys):
    assert main(["--n", "2", "--verify", "nope"]) == 2


def test_verify_log_lists_statements():
    code, log = run_verify(Config(n=2, verify=("commutation",)))
    assert code == 0
    assert "Omega1*x2 = p2^-1*x2*Omega1" in log


def test_verify_and_report_together(capsys):
    assert main(["--n", "1", "--verify", "trace", "--report"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] trace" in out and '"strata"' in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qspectra", "--n", "1", "--format", "text"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert "4 admissible sets" in res.stdout
