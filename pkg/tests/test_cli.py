import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cli_cases import CASES, FIX, K4M
from sigcircles.cli import run_command
from sigcircles.schemas import SCHEMAS


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,code", CASES, ids=[" ".join(a[:3]) for a, _ in CASES])
def test_json_output_validates(argv, code):
    got, out, _ = run(argv + ["--json"])
    assert got == code
    jsonschema.validate(json.loads(out), SCHEMAS[argv[0]])


@pytest.mark.parametrize("argv,code", CASES, ids=[" ".join(a[:3]) for a, _ in CASES])
def test_text_output(argv, code):
    got, out, _ = run(argv)
    assert got == code and out.strip()


def test_documented_examples():
    assert run(["balance", *K4M])[1].splitlines()[0] == "unbalanced; witness 0-1-2"
    data = json.loads(run(["frustration", *K4M, "--json"])[1])
    assert (data["index"], data["number"], data["edge_witness"]) == (2, 2, ["0-1", "2-3"])
    code, out, _ = run(["realize", "--gen", "kn:4", "--circles", str(FIX / "one-triangle.txt")])
    assert code == 1 and out.strip() == "infeasible: theta violation 0-1-2 / 0-1-3 / 0-2-1-3"
    code, out, _ = run(["realize", "--gen", "kn:4", "--circles", str(FIX / "k4-triangles.txt"), "--json"])
    assert code == 0 and json.loads(out)["feasible"]
    out = run(["conjectures", *K4M])[1]
    assert "E2-3conn     DISAGREE at 0-1/2-3" in out
    assert "[S1 exception]" in run(["survey", *K4M])[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["balance"],
        ["balance", "--gen", "kn:4", "--input", "x.sgt"],
        ["balance", "--gen", "blob:3"],
        ["balance", "--gen", "kn:4", "--sign", "list:+-"],
        ["balance", "--input", "/nonexistent.sgt"],
        ["circles", "--gen", "kn:7", "--budget", "10"],
        ["frustration", "--gen", "kn:8", "--classes", "4"],
        ["census", "--gen", "kn:6", "--classes", "4"],
        ["realize", "--gen", "kn:4"],
        ["bridges", "--gen", "kn:4"],
        ["bridges", "--gen", "kn:4", "--circle", "0-1"],
        ["profile", "--gen", "kn:4", "--edge", "0-9"],
        ["sweep"],
        ["sweep", "--gen", "kn:3", "--seeds", "x"],
        ["nosuchcommand"],
        ["pack", "--gen", "kn:4", "--disjoint", "arc"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv)[0] == 2


def test_error_json():
    code, out, err = run(["balance", "--gen", "blob:3", "--json"])
    assert code == 2 and "error" in err
    jsonschema.validate(json.loads(out), SCHEMAS["error"])


def test_parse_error_reports_line(tmp_path):
    bad = tmp_path / "bad.sgt"
    bad.write_text("3 2\n0 1 +\n1 1 -\n")
    code, _, err = run(["balance", "--input", str(bad)])
    assert code == 2 and "line 3" in err


def test_decompose_undecided_exit_1():
    code, out, _ = run(["decompose", "--gen", "kn:7", "--sign", "random:0.5", "--seed", "1", "--nodes", "2", "--json"])
    assert code == 1 and json.loads(out)["status"] == "undecided"


def test_census_csv():
    code, out, _ = run(["census", "--gen", "kn:4", "--csv"])
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "class,c3,c4" and len(lines) == 9


def test_sweep_log(tmp_path):
    log = tmp_path / "log.jsonl"
    code, out, _ = run(["sweep", "--gen", "kn:4", "--all-classes", "--log", str(log), "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["instances"] == 8
    assert data["disagreements"]["E2-3conn"] >= 1
    recs = [json.loads(line) for line in log.read_text().splitlines()]
    assert sum(r["kind"] == "conjectures" for r in recs) == 8
    assert any(r["kind"] == "s1-exception" for r in recs)


def test_sweep_threads_match_serial():
    a = run(["sweep", "--gen", "kn:4", "--all-classes", "--json"])[1]
    b = run(["sweep", "--gen", "kn:4", "--all-classes", "--json", "--threads", "2"])[1]
    assert a == b


def test_conjectures_log_appends(tmp_path):
    log = tmp_path / "c.jsonl"
    run(["conjectures", *K4M, "--log", str(log)])
    run(["conjectures", *K4M, "--log", str(log), "--id", "E5"])
    assert len(log.read_text().splitlines()) == 7


def test_console_script_and_module():
    out = subprocess.run([sys.executable, "-m", "sigcircles.cli", "balance", *K4M], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("unbalanced")
    out = subprocess.run([sys.executable, "-m", "sigcircles.cli", "--help"], capture_output=True, text=True)
    assert "conjectures" in out.stdout and "CN1-CN3" in out.stdout
