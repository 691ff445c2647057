import io
import json
import subprocess
import sys

import pytest

from hhcalc import cli
from hhcalc.errors import UnknownScenario
from hhcalc.scenarios import load_scenario, run_scenario, run_steps


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_parse_weights():
    assert cli.parse_weights("1^6,2") == (1, 1, 1, 1, 1, 1, 2)
    assert cli.parse_weights("1, 2 ,3") == (1, 2, 3)


def test_hodge_json(capsys):
    code, out, _ = run(capsys, "hodge", "--weights", "1^6", "--degree", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["h"][2][2] == 142
    assert payload["metadata"]["euler_characteristic"] == 188


def test_hodge_text(capsys):
    code, out, _ = run(capsys, "hodge", "--weights", "1^4", "--degree", "4", "--format", "text")
    assert code == 0
    assert [r.split() for r in out.splitlines()][2] == ["1", "20", "1"]


def test_hodge_not_applicable_exits_1(capsys):
    code, _, err = run(capsys, "hodge", "--weights", "1,1,3,3", "--degree", "5")
    assert code == 1 and "NotApplicable" in err


def test_bad_weights_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["hodge", "--weights", "1^x", "--degree", "4"])
    assert exc.value.code == 2


def test_hh_both_routes(capsys, tmp_path):
    k3 = write(tmp_path, "k3.json", {"dim": 2, "h": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]})
    code, out, _ = run(capsys, "hh", "--from-hodge", k3, "--cy-shift", "2", "--trivial-canonical")
    assert code == 0
    payload = json.loads(out)
    assert payload["homology"]["dims"] == {"-2": 1, "0": 22, "2": 1}
    assert payload["cohomology"]["dims"] == {"0": 1, "2": 22, "4": 1}


def test_hh_disagreeing_routes(capsys, tmp_path):
    k3 = write(tmp_path, "k3.json", {"dim": 2, "h": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]})
    code, _, err = run(capsys, "hh", "--from-hodge", k3, "--cy-shift", "1", "--trivial-canonical")
    assert code == 1 and "Inconsistent" in err


def test_hh_usage(capsys):
    assert run(capsys, "hh")[0] == 2


def test_sod_residual_from_stdin(capsys, monkeypatch):
    spec = {"total": {"dims": {"-2": 21, "0": 146, "2": 21}}, "exceptional_count": 2}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(spec)))
    code, out, _ = run(capsys, "sod", "residual", "-")
    assert code == 0
    assert json.loads(out)["residual"]["dims"] == {"-2": 21, "0": 144, "2": 21}


def test_sod_negative_exit_1(capsys, tmp_path):
    spec = write(tmp_path, "s.json", {"total": {"dims": {"0": 1}}, "exceptional_count": 2})
    code, _, err = run(capsys, "sod", "residual", spec)
    assert code == 1 and "NegativeDimension" in err


def test_sod_cohomology_not_additive(capsys, tmp_path):
    spec = write(tmp_path, "s.json", {"total": {"dims": {"0": 3}, "kind": "cohomology"}, "exceptional_count": 1})
    code, _, err = run(capsys, "sod", "residual", spec)
    assert code == 1 and "NotAdditive" in err


def test_schema_error_exit_2(capsys, tmp_path):
    spec = write(tmp_path, "s.json", {"total": {"dims": {"x": 1}}})
    code, _, err = run(capsys, "sod", "residual", spec)
    assert code == 2 and "s.json.total.dims['x']" in err


def test_split(capsys, tmp_path):
    cg = write(tmp_path, "cg.json", {"dims": {"0": 1, "2": 90, "3": 2, "4": 90, "6": 1}})
    hom = write(tmp_path, "hom.json", {"dims": {"-2": 21, "0": 144, "2": 21}})
    code, out, _ = run(capsys, "split", "--cg", cg, "--hom", hom, "--shift", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["hh_coh"]["lo"]["dims"] == {"0": 1, "2": 90, "4": 90, "6": 1}
    assert payload["hh_coh"]["hi"]["dims"]["3"] == 2
    code, out, _ = run(capsys, "split", "--cg", cg, "--hom", hom, "--shift", "3", "--format", "text")
    assert "degree   3: [0, 2]" in out


def test_split_inconsistent(capsys, tmp_path):
    cg = write(tmp_path, "cg.json", {"2": 5})
    hom = write(tmp_path, "hom.json", {"0": 1})
    bounds = write(tmp_path, "b.json", {"lo": {"2": 1}, "hi": {"2": 1}})
    code, _, err = run(capsys, "split", "--cg", cg, "--hom", hom, "--shift", "2", "--coh-bounds", bounds)
    assert code == 1 and "Inconsistent" in err


def test_serre(capsys):
    code, out, _ = run(capsys, "serre", "--n", "3", "--q", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["fractional_cy"] == {"p": 6, "q": 2}
    assert payload["invariant_category"] == {"shift_n": 3, "twist_order_q": 1}


def test_orbifold(capsys, tmp_path):
    data = write(tmp_path, "d.json", {"data": [{"label": "1", "codim": 0, "table": {"0,0": 1}}, {"label": "g", "codim": 2, "table": {"0,0": 1}}]})
    code, out, _ = run(capsys, "orbifold", data)
    assert code == 0
    assert json.loads(out)["hi"]["dims"] == {"0": 1, "2": 1}


def test_verify_list_and_run(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and json.loads(out)["scenarios"] == ["enriques-k3", "quartic-fourfold"]
    code, out, _ = run(capsys, "verify", "quartic-fourfold", "--format", "text")
    assert code == 0 and "all steps pass" in out


def test_verify_unknown_scenario(capsys):
    code, _, err = run(capsys, "verify", "no-such")
    assert code == 2 and "unknown scenario" in err


def test_verify_failing_scenario_exits_1(capsys, tmp_path):
    data = load_scenario("quartic-fourfold")
    data["steps"][2]["expected"] = {"dims": {"0": 1}}
    path = write(tmp_path, "tampered.json", data)
    code, out, _ = run(capsys, "verify", path)
    assert code == 1
    assert json.loads(out)["n_failed"] >= 1


# -- scenarios ---------------------------------------------------------------------


@pytest.mark.parametrize("name", ["quartic-fourfold", "enriques-k3"])
def test_shipped_scenarios_pass(name):
    report = run_scenario(name)
    assert report.passed, report.to_text()


def test_unknown_scenario():
    with pytest.raises(UnknownScenario):
        run_scenario("no-such")


def test_tampered_step_is_reported_not_raised():
    steps = load_scenario("quartic-fourfold")["steps"]
    steps[0]["expected"] = {"dim": 4, "h": []}
    steps.append({"id": "bad", "op": "nope"})
    steps.append({"id": "dangling", "op": "hh_homology", "inputs": {"diamond": {"$ref": "missing"}}})
    report = run_steps("tampered", steps)
    failed = {s.id for s in report.steps if not s.passed}
    assert failed == {"diamond_X", "bad", "dangling"}
    assert "FAIL" in report.to_text()


def test_console_entry_point_runs_quickly():
    proc = subprocess.run(
        [sys.executable, "-m", "hhcalc", "hodge", "--weights", "1^6,2", "--degree", "4"],
        capture_output=True,
        text=True,
        timeout=30,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 5
