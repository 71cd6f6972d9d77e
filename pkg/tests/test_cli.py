"""CLI behavior and exit codes."""

import json

from koshzeta.cli import main


def test_roots_command(capsys):
    rc = main(["--digits", "20", "roots", "--p", "1", "--count", "3"])
    out = capsys.readouterr().out.strip().splitlines()
    assert rc == 0
    assert len(out) == 3
    assert out[0].startswith("1\t0.78763729")


def test_eval_zeta(capsys):
    rc = main(["--digits", "20", "eval", "zeta", "2", "--p", "1"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out.startswith("2.138007267")


def test_eval_eta_continuation(capsys):
    rc = main(["--digits", "20", "eval", "eta", "-3", "--p", "1"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert out.startswith("0.017871161")


def test_pole_is_usage_error(capsys):
    rc = main(["eval", "zeta", "1", "--p", "1"])
    assert rc == 2


def test_bad_arguments_exit_2():
    assert main(["eval", "nosuchfn", "2"]) == 2


def test_verify_smoke_json(capsys, tmp_path):
    out = tmp_path / "report.json"
    rc = main(["verify", "--profile", "smoke", "--only", "roots,closedform",
               "--json", "--quiet", "--out", str(out)])
    captured = capsys.readouterr().out
    assert rc == 0
    doc = json.loads(captured)
    assert doc["schema"] == "koshliakov-report/1"
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["errors"] == 0
    assert out.exists()
    on_disk = json.loads(out.read_text())
    assert on_disk["checks"] == doc["checks"]


def test_verify_csv(tmp_path, capsys):
    csvp = tmp_path / "report.csv"
    rc = main(["verify", "--profile", "smoke", "--only", "roots",
               "--csv", str(csvp), "--quiet"])
    capsys.readouterr()
    assert rc == 0
    lines = csvp.read_text().strip().splitlines()
    assert lines[0].startswith("id,status")
    assert len(lines) > 1
