"""Command-line interface: documents, formats, exit codes."""
import csv
import io
import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from monopole_spectra.cli import main

SCHEMA = json.loads(resources.files("monopole_spectra").joinpath("schemas/document.v1.json").read_text())


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def doc_of(argv, capsys):
    code, out, err = run(argv + ["--format", "json"], capsys)
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


@pytest.mark.parametrize("argv", [
    ["curve2", "--mass", "1", "--kappa", "0.6"],
    ["curve2", "--mass", "0", "--kappa", "1/2"],
    ["curve2", "--mass", "2", "--kappa", "0.3", "--limit", "axial"],
    ["curve2", "--mass", "2", "--kappa", "0.3", "--limit", "separation"],
    ["curve2", "--mass", "0", "--kappa", "0.4", "--limit", "nullaron"],
    ["curve2", "--mass", "1", "--kappa", "0.4", "--limit", "euclid"],
    ["platonic", "--group", "tetra", "--mass", "1"],
    ["platonic", "--group", "octa", "--alpha", "0.2"],
    ["scan", "--group", "octa", "--mass-min", "0.5", "--mass-max", "2", "--steps", "4"],
    ["half-integer", "--group", "tetra", "--max-m", "1"],
    ["rational", "--group", "octa", "--mass", "1/2"],
    ["verify", "--suite", "special"],
])
def test_documents_validate(argv, capsys):
    doc = doc_of(argv, capsys)
    assert doc["schema_version"] == "1.0" and doc["command"] == argv[0]


def test_curve2_normalized_and_exact_nullaron(capsys):
    doc = doc_of(["curve2", "--mass", "1", "--kappa", "0.6"], capsys)
    m = doc["outputs"]["coefficients"]
    assert m[2][0] == {"re": "1", "im": "0"}
    assert doc["outputs"]["cycle_integers"] == [0, -1]
    doc = doc_of(["curve2", "--mass", "0", "--kappa", "1/2"], capsys)
    assert "1/2" in json.dumps(doc["outputs"])


def test_numbers_have_fifteen_digits(capsys):
    doc = doc_of(["platonic", "--group", "tetra", "--mass", "0.5"], capsys)
    a = doc["outputs"]["alpha"]
    assert len(a.replace("0.", "", 1).lstrip("0")) <= 15
    assert abs(float(a) - 3 ** -0.5) < 1e-9


def test_scan_csv_default_and_order(capsys):
    code, out, _ = run(["scan", "--group", "tetra", "--mass-min", "0.5", "--mass-max", "1.5", "--steps", "3"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "alpha", "g2", "g3", "j", "ell1", "residual"]
    assert [r[0] for r in rows[1:]] == ["0.5", "1", "1.5"]
    assert rows[2][1] == "0.267949192431123"
    assert {r[5] for r in rows[1:]} == {"4"}


def test_scan_independent_of_thread_count(tmp_path):
    outs = []
    for threads in ("1", "4"):
        env = dict(os.environ, MONOPOLE_SPECTRA_THREADS=threads)
        p = subprocess.run([sys.executable, "-m", "monopole_spectra", "scan", "--group", "octa",
                            "--mass-min", "0.1", "--mass-max", "3", "--steps", "12"],
                           capture_output=True, text=True, env=env, check=True)
        outs.append(p.stdout)
    assert outs[0] == outs[1]


def test_bad_thread_env_is_usage_error():
    env = dict(os.environ, MONOPOLE_SPECTRA_THREADS="many")
    p = subprocess.run([sys.executable, "-m", "monopole_spectra", "scan", "--group", "octa",
                        "--mass-min", "0.1", "--mass-max", "1", "--steps", "2"],
                       capture_output=True, text=True, env=env)
    assert p.returncode == 2


def test_deterministic_output(capsys):
    argv = ["platonic", "--group", "octa", "--mass", "0.7"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_half_integer_table(capsys):
    code, out, _ = run(["half-integer", "--group", "tetra", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    exact = {r["m"]: r["exact"] for r in rows}
    assert exact["1/2"] == "sqrt(3)/3"
    assert exact["1"] == "2-sqrt(3)"
    assert exact["3/2"] == "sqrt(23-4*sqrt(33))"


def test_rational_budget_falls_back(capsys):
    doc = doc_of(["rational", "--group", "tetra", "--mass", "1/3", "--max-n", "5"], capsys)
    assert doc["outputs"]["method"] == "numeric"
    assert doc["outputs"]["n"] == 11


def test_out_file(tmp_path, capsys):
    path = tmp_path / "o.json"
    code, out, _ = run(["platonic", "--group", "tetra", "--mass", "1", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    jsonschema.validate(json.loads(path.read_text()), SCHEMA)


@pytest.mark.parametrize("argv,code", [
    (["curve2", "--mass", "-1", "--kappa", "0.5"], 2),
    (["curve2", "--mass", "1", "--kappa", "1.5"], 2),
    (["platonic", "--group", "icosa", "--mass", "1"], 2),
    (["platonic", "--group", "tetra", "--mass", "1", "--alpha", "0.3"], 2),
    (["platonic", "--group", "octa", "--alpha", "2"], 2),
    (["rational", "--group", "tetra", "--mass", "0.5"], 0),
    (["rational", "--group", "tetra", "--mass", "x"], 2),
    (["scan", "--group", "tetra", "--mass-min", "1", "--mass-max", "0.5", "--steps", "3"], 2),
    (["nonsense"], 2),
    ([], 2),
])
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_verify_failure_exit_code(monkeypatch, capsys):
    from monopole_spectra import verification

    def failing():
        return [verification.Check("special", "forced", False, 1.0, 0.0)]

    monkeypatch.setitem(verification.SUITES, "special", failing)
    code, out, _ = run(["verify", "--suite", "special"], capsys)
    doc = json.loads(out)
    assert code == 1 and doc["outputs"]["passed"] is False
    assert doc["outputs"]["failures"] == ["special:forced"]


def test_entry_point_subprocess():
    p = subprocess.run([sys.executable, "-m", "monopole_spectra", "verify", "--suite", "cohomology"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["outputs"]["passed"] is True
