import io
import json
import math

import pytest

from rydwire.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_verify_single():
    code, out = run("verify", "cx-ab")
    assert code == 0
    assert "PASS" in out


def test_verify_all():
    code, out = run("verify", "all")
    assert code == 0
    assert "all pass" in out


def test_verify_bogus_gate(capsys):
    code, _ = run("verify", "bogus")
    assert code == 2
    assert "valid names" in capsys.readouterr().err


def test_bad_subcommand():
    assert run("frobnicate")[0] == 2


def test_compile_cp00(tmp_path):
    path = tmp_path / "cp00.json"
    code, out = run("compile", "cp00", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["metadata"]["gate"] == "cp00"
    assert doc["metadata"]["pulse_count"] == 2
    assert doc["metadata"]["total_duration_us"] == pytest.approx(0.5)
    assert doc["layout"] == {"name": "chain3", "d_um": 7.0}


def test_compile_unwritable(tmp_path):
    code, _ = run("compile", "cz", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 3


def test_simulate_ideal_cz(tmp_path):
    path = tmp_path / "cz.json"
    run("compile", "cz", "--out", str(path))
    report = tmp_path / "r.json"
    code, out = run("simulate", str(path), "--report", str(report))
    assert code == 0
    rep = json.loads(report.read_text())
    assert rep["deviation"] < 1e-9
    amp = rep["states"][3]["amplitudes"]["11"]
    assert abs(complex(*amp)) == pytest.approx(1, abs=1e-12)


def test_simulate_realistic_cp00(tmp_path):
    path = tmp_path / "cp00.json"
    run("compile", "cp00", "--out", str(path))
    report = tmp_path / "r.json"
    code, _ = run("simulate", str(path), "--model", "realistic", "--d", "7", "--report", str(report))
    assert code == 0
    rep = json.loads(report.read_text())
    amp = complex(*rep["states"][0]["amplitudes"]["00"])
    assert abs(amp) ** 2 > 0.9
    assert rep["states"][1]["leakage"] > 0


def test_simulate_missing_file(tmp_path):
    assert run("simulate", str(tmp_path / "nope.json"))[0] == 3


def test_simulate_invalid_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert run("simulate", str(path))[0] == 2


def test_sweep_stdout():
    code, out = run("sweep", "vdw", "6", "7", "2")
    assert code == 0
    body = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert body[0].startswith("d_um,")
    assert len(body) == 3


def test_sweep_bad_range():
    assert run("sweep", "vdw", "7", "6", "10")[0] == 2
    assert run("sweep", "vdw", "6", "7", "1")[0] == 2


def test_sweep_to_file(tmp_path):
    path = tmp_path / "s.csv"
    code, out = run("sweep", "foerster", "8", "10", "3", "--out", str(path))
    assert code == 0 and "peak" in out
    assert path.read_text().startswith("# scheme=foerster")


def test_budget():
    code, out = run("budget", "6.8")
    assert code == 0
    assert "3.9894e-03" in out and "derived" in out
    code, out = run("budget", "9.17", "foerster")
    assert code == 0 and "foerster" in out
