import csv
import io
import json
import subprocess
import sys

import pytest

from cctp.cli import RunConfig, lambda_string, main, table_string, workers_from_env
from cctp.scalar import SQRT2, FieldElement


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_table_string():
    assert table_string((-2955751 * SQRT2 + 5033675) / 16549127) == "(-2955751√2+5033675)/16549127"
    assert table_string(SQRT2 - 1) == "√2-1"
    assert table_string(FieldElement(-7, 0) / 3) == "-7/3"
    assert table_string(FieldElement(2)) == "2"


def test_lambda_string():
    assert lambda_string(1.84198) == "1.8420"
    assert lambda_string(1.5974e-9) == "1.5974e-09"


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig("cct", 0, "exact")
    with pytest.raises(ValueError):
        RunConfig("cct-inscribed", 3, "exact")
    with pytest.raises(ValueError):
        RunConfig("nope", 3, "exact")


def test_workers_env(monkeypatch):
    monkeypatch.setenv("CCT_WORKERS", "4")
    assert workers_from_env() == 4
    monkeypatch.setenv("CCT_WORKERS", "junk")
    assert workers_from_env() == 1


def test_generate_csv(capsys):
    rc, out, _ = run(capsys, "generate", "--family", "cct", "--n", "4", "--format", "csv")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["vertex", "first", "second", "third", "lambda"]
    assert rows[1][1:4] == ["√2-1", "-√2+1", "2"]
    assert rows[3][1] == "(-7√2+11)/23"


def test_generate_off(capsys):
    rc, out, _ = run(capsys, "generate", "--n", "3", "--format", "off")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "OFF"
    nv, nf, _ = map(int, lines[1].split())
    assert nv == 48 and nf == 36 * 2


def test_generate_verify_roundtrip(tmp_path, capsys):
    path = tmp_path / "c5.json"
    rc, _, _ = run(capsys, "generate", "--n", "5", "--out", str(path))
    assert rc == 0
    doc = json.loads(path.read_text())
    assert doc["width"] == 5 and doc["certificates"]["convex"]["passed"]
    rc, out, _ = run(capsys, "verify", "--in", str(path), "--checks", "ideal,convex,local,avh")
    assert rc == 0 and json.loads(out)["passed"]


def test_verify_detects_tampering(tmp_path, capsys):
    path = tmp_path / "c4.json"
    run(capsys, "generate", "--n", "4", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["seeds"][3][0] = {"a": "1", "b": "0", "c": "0", "d": "0"}
    path.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, "verify", "--in", str(path), "--checks", "convex")
    assert rc == 1 and not json.loads(out)["passed"]


def test_verify_bad_input(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"schema": "cct/1", "seeds": [')
    rc, _, err = run(capsys, "verify", "--in", str(path))
    assert rc == 2 and "error" in json.loads(err)
    path.write_text(json.dumps({"schema": "other"}))
    assert run(capsys, "verify", "--in", str(path))[0] == 2
    assert run(capsys, "verify", "--in", str(tmp_path / "missing.json"))[0] == 2
    good = tmp_path / "c3.json"
    run(capsys, "generate", "--n", "3", "--out", str(good))
    assert run(capsys, "verify", "--in", str(good), "--checks", "bogus")[0] == 2


def test_inscribed_roundtrip(tmp_path, capsys):
    path = tmp_path / "in.json"
    rc, _, _ = run(capsys, "generate", "--family", "cct-inscribed", "--n", "4", "--out", str(path))
    assert rc == 0
    assert json.loads(path.read_text())["precision"] == 256
    rc, out, _ = run(capsys, "verify", "--in", str(path), "--checks", "sphere")
    assert rc == 0


def test_rational_json(capsys):
    rc, out, _ = run(capsys, "generate", "--family", "cct-rational", "--n", "3")
    assert rc == 0
    doc = json.loads(out)
    assert doc["rational"]["0,0,0"] == ["1/3", "-1/3", "2", "0", "1"]


def test_pcctp(capsys):
    rc, out, _ = run(capsys, "generate", "--family", "pcctp", "--n", "1")
    assert rc == 0
    rep = json.loads(out)["report"]
    assert rep["vertices"] == 153 and rep["dim"] == 69
    rc, _, err = run(capsys, "generate", "--family", "pcctp", "--n", "1", "--format", "csv")
    assert rc == 1


def test_bad_config_exit_code(capsys):
    assert run(capsys, "generate", "--n", "0")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cctp", "generate", "--n", "2", "--format", "csv"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.count("\n") == 4
