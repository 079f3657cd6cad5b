import csv
import io
import json
import math
from importlib import resources

import jsonschema
import pytest

from thermal_vacuum.cli import main
from thermal_vacuum.sweep import FIELDS, sweep, temperature_grid, to_csv
from thermal_vacuum import StateClass
from thermal_vacuum.errors import DomainError

from conftest import mp_coth, mp_csch


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_sweep_csv_ccs(capsys):
    code, out, _ = run(capsys, "sweep", "--t-min", "0", "--t-max", "10", "--points", "11")
    assert code == 0
    assert out.splitlines()[0] == ",".join(FIELDS)
    assert "\r" not in out
    rows = rows_of(out)
    assert len(rows) == 11
    cold = rows[0]
    assert float(cold["T"]) == 0.0 and cold["x"] == "inf"
    assert float(cold["cov"]) == 0.0 and float(cold["up_product"]) == 0.5
    warm = rows[1]
    assert float(warm["up_product"]) == pytest.approx(0.5 * mp_coth(0.5), rel=1e-15)
    assert float(warm["cov"]) == pytest.approx(0.5 * mp_csch(0.5), rel=1e-15)
    for r in rows:
        assert abs(float(r["schrodinger_residual"])) < 1e-12 * float(r["var_q"]) * float(r["var_p"])
        assert abs(float(r["zeroth_residual"])) < 1e-12


def test_sweep_scs_up_product_constant(capsys):
    code, out, _ = run(capsys, "sweep", "--class", "scs", "--t-max", "20", "--points", "9")
    assert code == 0
    for r in rows_of(out):
        assert float(r["up_product"]) == pytest.approx(0.5, abs=1e-15)
        assert float(r["cov"]) == 0.0


def test_sweep_round_trip_digits(capsys):
    _, out, _ = run(capsys, "sweep", "--t-min", "0.5", "--t-max", "3", "--points", "4")
    row = sweep([0.5], StateClass.CCS)[0]
    assert float(rows_of(out)[0]["var_q"]) == row.var_q


def test_sweep_log_spacing(capsys):
    _, out, _ = run(capsys, "sweep", "--t-min", "0.1", "--t-max", "1000", "--points", "5", "--spacing", "log")
    temps = [float(r["T"]) for r in rows_of(out)]
    assert temps == pytest.approx([0.1, 1, 10, 100, 1000])


@pytest.mark.parametrize(
    "argv",
    [
        ("sweep", "--t-min", "5", "--t-max", "1"),
        ("sweep", "--t-min", "-1"),
        ("sweep", "--points", "1"),
        ("sweep", "--spacing", "log", "--t-min", "0"),
        ("sweep", "--omega", "0"),
    ],
)
def test_sweep_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_sweep_write_failure(capsys, tmp_path):
    code, _, err = run(capsys, "sweep", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 3


def test_sweep_to_file_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["sweep", "--t-min", "0", "--t-max", "7", "--points", "23", "--omega", "1.3", "--kb", "0.8"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_json_matches_schema(capsys):
    code, out, _ = run(capsys, "sweep", "--format", "json", "--points", "5", "--omega", "2")
    assert code == 0
    doc = json.loads(out)
    schema = json.loads(resources.files("thermal_vacuum").joinpath("sweep.schema.json").read_text())
    jsonschema.validate(doc, schema)
    assert doc["meta"]["class"] == "CCS" and doc["meta"]["omega"] == 2.0
    assert doc["rows"][0]["x"] is None
    assert set(doc["rows"][1]) == set(FIELDS)


def test_schema_rejects_missing_field(capsys):
    _, out, _ = run(capsys, "sweep", "--format", "json", "--points", "2")
    doc = json.loads(out)
    del doc["rows"][0]["cov"]
    schema = json.loads(resources.files("thermal_vacuum").joinpath("sweep.schema.json").read_text())
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, schema)


def test_temperature_grid_errors():
    with pytest.raises(DomainError):
        temperature_grid(0.0, 1.0, 3, "cubic")


def test_to_csv_header_only():
    assert to_csv([]) == ",".join(FIELDS) + "\n"


def test_state_cold(capsys):
    code, out, _ = run(capsys, "state", "--tau", "0", "--phi", "0")
    assert code == 0
    assert "ColdVacuum" in out and "var_q                 0.5\n" in out


def test_state_thermal(capsys):
    code, out, _ = run(capsys, "state", "--temperature", "1", "--class", "ccs")
    assert code == 0
    assert "CCS" in out
    assert f"cov                   {0.5 * mp_csch(0.5):.10g}" in out


def test_state_scs(capsys):
    code, out, _ = run(capsys, "state", "--tau", "0.5", "--phi", "0")
    assert "SCS" in out and "up_product            0.5\n" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("state",),
        ("state", "--tau", "0.5", "--temperature", "1"),
        ("state", "--phi", "0.3"),
        ("state", "--temperature", "1"),
        ("state", "--temperature", "-1", "--class", "ccs"),
    ],
)
def test_state_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_analytic(capsys):
    code, out, _ = run(capsys, "verify", "analytic")
    assert code == 0 and "result: PASS" in out


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "bogus"])
    assert info.value.code == 2


def test_verify_truncation_too_small(capsys):
    code, _, err = run(capsys, "verify", "fock", "--dim", "16")
    assert code == 1 and "dim" in err


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "thermal_vacuum", "state", "--tau", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "ColdVacuum" in res.stdout
