import importlib

from legtheta import DiagramError, fuzz, random_walk, realize_theta

# the package re-exports the function under the module's name
fz = importlib.import_module("legtheta.fuzz")


def test_fuzz_passes(parallel):
    rep = fuzz(parallel, walks=4, steps=20, seed=0)
    assert rep["passed"]
    assert rep["failures"] == []
    assert set(rep["checks"]) == set(fz.CHECKS)
    assert rep["checks"]["invariant_vector"] == {"passed": 80, "failed": 0}
    assert rep["checks"]["table1"] == {"passed": 4, "failed": 0}
    assert sum(rep["table1_rows"].values()) == 4


def test_fuzz_deterministic(antiparallel):
    assert fuzz(antiparallel, 3, 15, 42) == fuzz(antiparallel, 3, 15, 42)


def test_fuzz_rows_never_impossible():
    d = realize_theta((-2, -2, -2), (1, 1, -1))
    rep = fuzz(d, walks=5, steps=20, seed=100)
    assert rep["passed"]
    assert not set(rep["table1_rows"]) & {"3", "6"}


def test_failure_reports_replayable_trace(parallel, monkeypatch):
    real = fz.validate
    limit = len(parallel.events) + 3

    def fussy(d):
        if len(d.events) >= limit:
            raise DiagramError("too long")
        return real(d)

    monkeypatch.setattr(fz, "validate", fussy)
    rep = fuzz(parallel, walks=3, steps=30, seed=7)
    assert not rep["passed"]
    assert rep["checks"]["validity"]["failed"] == len(rep["failures"]) > 0
    for f in rep["failures"]:
        assert f["check"] == "validity" and f["detail"] == "too long"
        assert f["seed"] == 7 + f["walk"]
        assert len(f["trace"]) == f["step"]
        replay = random_walk(parallel, f["step"], f["seed"])
        assert len(replay.diagram.events) >= limit
        assert [t.describe() for t in replay.trace] == f["trace"]
        # the prefix one move shorter is still fine
        assert len(random_walk(parallel, f["step"] - 1, f["seed"]).diagram.events) < limit
