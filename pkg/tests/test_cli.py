import json
import shutil
import subprocess
import sys

import pytest

from walledbrauer import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_diagrams_json_schema(capsys):
    code, out, _ = run(capsys, "verify-diagrams", "--r", "2", "--t", "2")
    assert code == cli.OK
    rep = json.loads(out)
    assert set(rep) == {"suite", "params", "records", "summary"}
    assert rep["suite"] == "verify-diagrams"
    assert rep["params"] == {"r": 2, "t": 2, "delta": 5}
    for rec in rep["records"]:
        assert {"id", "anchor", "status"} <= set(rec)
        assert rec["status"] == "pass" and "witness" not in rec
    assert rep["summary"]["failed"] == 0


@pytest.mark.parametrize("argv", [
    ["verify-diagrams", "--r", "2", "--t", "2", "--corrupt", "s1"],
    ["verify-diagrams", "--r", "2", "--t", "2", "--corrupt", "sb1"],
    ["verify-diagrams", "--r", "2", "--t", "2", "--corrupt", "e1"],
    ["verify-tower", "--r", "2", "--t", "2", "--corrupt", "y"],
    ["verify-phi", "--r", "1", "--t", "1", "--corrupt", "x1"],
    ["verify-freeness", "--corrupt", "duplicate"],
    ["verify-schur-weyl", "--m", "2", "--n", "2", "--p", "1", "--q", "-5", "--corrupt", "x1"],
])
def test_negative_controls_fail(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == cli.FAILED
    assert "FAILED" in err
    bad = [r for r in json.loads(out)["records"] if r["status"] == "fail"]
    assert bad and all("witness" in r for r in bad)


def test_printed_convention_fails_at_32(capsys):
    code, _, err = run(capsys, "verify-schur-weyl", "--m", "3", "--n", "2", "--p", "2",
                       "--q", "-4", "--convention", "printed")
    assert code == cli.FAILED
    assert "aff06" in err


def test_schur_weyl_dimension(capsys):
    code, out, _ = run(capsys, "verify-schur-weyl", "--m", "2", "--n", "2", "--p", "1",
                       "--q", "-5")
    rep = json.loads(out)
    assert code == cli.OK and rep["summary"]["dimension"] == 8


@pytest.mark.parametrize("argv", [
    ["verify-diagrams", "--r", "2"],
    ["verify-phi", "--omega0", "one"],
    ["no-such-suite"],
    ["verify-diagrams", "--r", "2", "--t", "2", "--jobs", "0"],
    ["verify-phi", "--k", "3"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == cli.USAGE


def test_resource_guard(capsys):
    code, _, err = run(capsys, "verify-phi", "--r", "3", "--t", "3")
    assert code == cli.RESOURCE and "resource" in err


def test_classify_tsv(capsys):
    code, out, _ = run(capsys, "classify", "--m", "3", "--n", "2", "--p", "2", "--q", "-4")
    assert code == cli.OK
    lines = out.splitlines()
    assert lines[0].split("\t") == ["f", "lambda1", "lambda2", "kleshchev", "gram_rank",
                                    "gram_size"]
    assert len(lines) == 1 + 5
    assert all(len(l.split("\t")) == 6 for l in lines)


def test_gram_and_semisimple(capsys):
    code, out, _ = run(capsys, "gram", "--m", "2", "--n", "2", "--p", "1", "--q", "-5")
    assert code == cli.OK
    grams = json.loads(out)["summary"]["gram"]
    assert grams["1:((),())|((),())"]["matrix"] == [["0", "-12"], ["-12", "72"]]
    code, out, _ = run(capsys, "semisimple", "--m", "2", "--n", "2", "--p", "1/2", "--q", "0")
    assert code == cli.OK
    code, out, _ = run(capsys, "cellular-basis", "--m", "2", "--n", "2", "--p", "1",
                       "--q", "-5", "--format", "tsv")
    assert code == cli.OK and out.startswith("id\tanchor\tstatus\tinstances")


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify-tower", "--r", "2", "--t", "2", "--out", str(dest))
    assert code == cli.OK
    assert json.loads(dest.read_text())["suite"] == "verify-tower"
    assert out.startswith("verify-tower") and "passed" in out


def test_deterministic_across_jobs(capsys, monkeypatch):
    argv = ["verify-diagrams", "--r", "2", "--t", "2"]
    _, one, _ = run(capsys, *argv, "--jobs", "1")
    _, two, _ = run(capsys, *argv, "--jobs", "2")
    monkeypatch.setenv("WALLEDBRAUER_JOBS", "2")
    _, env, _ = run(capsys, *argv)
    assert one == two == env


@pytest.mark.skipif(shutil.which("walledbrauer") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["walledbrauer", "verify-diagrams", "--r", "1", "--t", "1",
                           "--format", "tsv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("id\tanchor")


def test_module_entry():
    proc = subprocess.run([sys.executable, "-m", "walledbrauer.cli", "verify-freeness"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
