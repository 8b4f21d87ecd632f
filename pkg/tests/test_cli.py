import json
from importlib import resources

import jsonschema
import pytest

from legtheta import parse, realize_theta, serialize
from legtheta.cli import main

from conftest import ANTIPARALLEL, PARALLEL

SCHEMA = json.loads(resources.files("legtheta").joinpath("schema/report.schema.json").read_text())


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in [("minimal", PARALLEL), ("anti", ANTIPARALLEL),
                       ("example", serialize(realize_theta((-1, -5, -3), (0, 0, 0)))),
                       ("bad", PARALLEL.replace("X", "Q") + "Q 1\n")]:
        p = tmp_path / f"{name}.lfd"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--report", "json")
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    assert rep["exit_code"] == code
    return code, rep


def test_invariants_text(capsys, files):
    code, out, _ = run(capsys, "invariants", files["minimal"])
    assert code == 0
    assert out.strip() == "tb=(-1,-1,-1) rot=(0,0,0) R=0 case=1"


def test_invariants_json(capsys, files):
    code, rep = run_json(capsys, "invariants", files["anti"])
    assert code == 0 and rep["status"] == "ok"
    assert rep["result"] == {"tb": [-1, -1, -2], "rot": [0, 0, -1], "R": -1,
                             "vertex_type": "antiparallel", "table1_case": 2}


def test_validate(capsys, files):
    code, rep = run_json(capsys, "validate", files["minimal"])
    assert code == 0 and rep["result"]["edges"] == ["e1", "e2", "e3"]
    code, rep = run_json(capsys, "validate", files["bad"])
    assert code == 1 and rep["status"] == "fail"
    assert rep["result"]["line"] == 10


def test_realize_not_acceptable(capsys):
    code, out, _ = run(capsys, "realize", "--tb", "0,0,0", "--rot", "0,0,0")
    assert code == 2
    assert "acceptable fails" in out


def test_realize_writes_file(capsys, tmp_path):
    target = tmp_path / "g.lfd"
    code, rep = run_json(capsys, "realize", "--tb", "-1,-5,-3", "--rot", "0,0,0", "-o", str(target))
    assert code == 0 and rep["result"]["case"] == 1
    assert parse(target.read_text()) == realize_theta((-1, -5, -3), (0, 0, 0))


def test_realize_bad_R(capsys):
    code, rep = run_json(capsys, "realize", "--tb", "-2,-2,-2", "--rot", "1,1,1")
    assert code == 2 and rep["status"] == "error"
    assert "R =" in rep["result"]["reason"]


def test_pushoff(capsys, files):
    code, rep = run_json(capsys, "pushoff", files["anti"])
    res = rep["result"]
    assert code == 0 and res["vertex_type"] == "antiparallel"
    assert len(res["components"]) == 3
    code, out, _ = run(capsys, "pushoff", files["minimal"])
    assert out.splitlines()[0] == "1 component(s), 5 crossings, parallel vertices"
    assert "sl=1" in out


def test_pretzel_check(capsys, files):
    code, rep = run_json(capsys, "pretzel-check", files["minimal"])
    assert code == 0 and rep["result"]["passed"]
    code, rep = run_json(capsys, "pretzel-check", files["example"])
    assert code == 0 and rep["result"]["checks"]["jones"] == "skipped"


def test_pretzel_check_failing_calibration(capsys, files, monkeypatch):
    monkeypatch.setattr("legtheta.pretzel.PRETZEL_POSITIVE_OVER", "rising")
    code, rep = run_json(capsys, "pretzel-check", files["minimal"])
    assert code == 1 and rep["status"] == "fail"
    assert rep["result"]["checks"]["jones"] == "mirror"
    code, out, _ = run(capsys, "pretzel-check", files["minimal"])
    assert code == 1
    assert "jones: mirror" in out and out.strip().endswith("FAIL")


def test_fuzz(capsys, files):
    code, rep = run_json(capsys, "fuzz", files["minimal"], "--walks", "2", "--steps", "10", "--seed", "3")
    assert code == 0 and rep["result"]["passed"]
    code, out, _ = run(capsys, "fuzz", files["minimal"], "--walks", "2", "--steps", "10")
    assert out.splitlines()[0].split() == ["check", "passed", "failed"]
    assert out.strip().endswith("PASS")


def test_render(capsys, files, tmp_path):
    code, out, _ = run(capsys, "render", files["minimal"])
    assert code == 0 and out.startswith("<?xml")
    target = tmp_path / "p.txt"
    code, _, _ = run(capsys, "render", files["minimal"], "--pushoff", "--format", "ascii",
                     "-o", str(target))
    assert code == 0 and "\\" in target.read_text()


def test_usage_errors(capsys, files):
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "realize", "--tb", "1,2", "--rot", "0,0,0")[0] == 2
    code, _, err = run(capsys, "invariants", "/no/such/file.lfd")
    assert code == 2 and "cannot read" in err
    code, _, err = run(capsys, "invariants", files["bad"])
    assert code == 2 and "line 10" in err


def test_cap_skips_jones(capsys, files):
    code, _, err = run(capsys, "pretzel-check", files["minimal"], "--cap", "1")
    assert code == 0    # the cap only skips the Jones comparison
    code, rep = run_json(capsys, "pretzel-check", files["minimal"], "--cap", "1")
    assert rep["result"]["checks"]["jones"] == "skipped"


def test_internal_error(capsys, files, monkeypatch):
    def boom(*a, **k):
        raise AssertionError("convention bug")
    monkeypatch.setattr("legtheta.cli.invariant_vector", boom)
    code, _, err = run(capsys, "invariants", files["minimal"])
    assert code == 3 and "convention bug" in err
