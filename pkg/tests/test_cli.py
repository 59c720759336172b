import json
import subprocess
import sys
from pathlib import Path

import pytest

from branchcurve.cli import main
from branchcurve.io import load_data

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_csv_matches_golden(capsys):
    code, out, _ = run(capsys, "geography", "enumerate", "--degree", "8", "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / "enumerate_d8.csv").read_text()


def test_output_is_deterministic(capsys):
    first = run(capsys, "monodromy", "enumerate", "--presentation", "sextic9.json",
                "--locals", "sextic9_locals.json", "--nu", "3", "4", "--format", "json")
    second = run(capsys, "monodromy", "enumerate", "--presentation", "sextic9.json",
                 "--locals", "sextic9_locals.json", "--nu", "3", "4", "--format", "json")
    assert first == second and first[0] == 0


def test_monodromy_counts_in_json(capsys):
    code, out, _ = run(capsys, "monodromy", "enumerate", "--presentation", "sextic9.json",
                       "--locals", "sextic9_locals.json", "--nu", "3", "4", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert {int(k): v for k, v in data["counts"].items()} == {3: 1, 4: 3, 5: 0}


def test_admissible_exit_codes(capsys):
    assert run(capsys, "geography", "admissible", "--d", "8", "--c", "12", "--n", "8")[0] == 0
    assert run(capsys, "geography", "admissible", "--d", "8", "--c", "13", "--n", "8")[0] == 1


def test_cubic_demo_passes(capsys):
    code, out, _ = run(capsys, "segre", "cubic-demo")
    assert code == 0 and "PASS" in out


def test_nonregular_subdivision_fails(capsys):
    code, out, _ = run(capsys, "patchwork", "convexity", "--subdivision", "nonregular_subdivision.json")
    assert code == 1 and "infeasible" in out
    assert run(capsys, "patchwork", "convexity", "--method", "fourier-motzkin")[0] == 0


def test_plans_through_cli(capsys):
    assert run(capsys, "patchwork", "validate", "--plan", "5")[0] == 0
    assert run(capsys, "patchwork", "targets", "--nu", "8", "--constructed", "56,336,840")[0] == 1
    assert run(capsys, "patchwork", "targets", "--nu", "8")[0] == 0


def test_c2_through_cli(capsys):
    code, out, _ = run(capsys, "patchwork", "c2", "--format", "json")
    assert code == 0 and json.loads(out)["found"]


def test_missing_file_is_an_input_error(capsys, tmp_path):
    code, _, err = run(capsys, "monodromy", "enumerate", "--presentation", str(tmp_path / "nope.json"), "--nu", "3")
    assert code == 2 and "not found" in err


def test_malformed_json_is_an_input_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "patchwork", "validate", "--subdivision", str(bad))[0] == 2


def test_out_of_range_is_an_input_error(capsys):
    assert run(capsys, "monodromy", "enumerate", "--presentation", "deltoid.json", "--nu", "12")[0] == 2


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["geography", "admissible", "--d", "8"])
    assert exc.value.code == 2


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, out, _ = run(capsys, "geography", "enumerate", "--degree", "8", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "enumerate_d8.csv").read_text()


def test_data_directory_override(capsys, tmp_path, monkeypatch):
    pres = load_data("deltoid.json")
    pres["relators"] = [[1]]
    (tmp_path / "deltoid.json").write_text(json.dumps(pres))
    monkeypatch.setenv("BRANCHCURVE_DATA", str(tmp_path))
    code, out, _ = run(capsys, "monodromy", "enumerate", "--presentation", "deltoid.json", "--nu", "2",
                       "--format", "json", "--no-transitive")
    # a generator equal to the identity admits no transposition image
    assert code == 0
    assert json.loads(out)["counts"] == {"2": 0}
    monkeypatch.delenv("BRANCHCURVE_DATA")
    code, out, _ = run(capsys, "monodromy", "enumerate", "--presentation", "deltoid.json", "--nu", "2",
                       "--format", "json", "--no-transitive")
    assert json.loads(out)["counts"] == {"2": 1}


def test_reproduce_all(capsys):
    code, out, _ = run(capsys, "reproduce", "all")
    assert code == 0
    assert out.count("verdict:") == 5


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "branchcurve.cli", "geography", "smooth", "--nu", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "12" in res.stdout
