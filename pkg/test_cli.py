import json
import pytest
from numpy.testing import assert_allclose
from typer.testing import CliRunner
from pyqip.cli import app
from pyqip.common import ConfigService
from pyqip.logger import setup_logger

COUNTING = "2*k1 - k0*k1 - 3*k0*k2"
PRICE = "7 + 4*k1 - 5*k0*k1 - 2*k0*k2"

setup_logger()
runner = CliRunner()

@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    config_dir = tmp_path / "config"
    monkeypatch.setattr(ConfigService, "CONFIG_DIR", str(config_dir))
    monkeypatch.setattr(ConfigService, "CONFIG_FILE", str(config_dir / "config.json"))
    monkeypatch.setattr(ConfigService, "_cache", None)
    monkeypatch.delenv(ConfigService.OUTPUT_DIR_ENV, raising=False)

def _record(path) -> dict:
    return json.loads(path.read_text())

@pytest.mark.parametrize("v0, count", [("0", 3), ("-3", 1), ("2", 2)])
def test_count_command(tmp_path, v0, count):
    out = tmp_path / "count.json"
    result = runner.invoke(app, ["count", "--poly", COUNTING, f"--v0={v0}", "--n", "3", "--m", "3", "--output", str(out)])
    assert result.exit_code == 0
    record = _record(out)
    assert record["command"] == "count"
    assert record["result"]["count"] == count
    assert record["params"]["v0"] == int(v0)

def test_expect_command(tmp_path):
    out = tmp_path / "expect.json"
    result = runner.invoke(app, ["expect", "--poly", PRICE, "--n", "3", "--m", "4", "--output", str(out)])
    assert result.exit_code == 0
    assert_allclose(_record(out)["result"]["quantum"], 30.76777, atol=1e-3)

def test_records_are_byte_identical_across_runs(tmp_path):
    args = ["expect", "--poly", PRICE, "--n", "3", "--m", "4", "--mode", "sampled", "--shots", "20000", "--seed", "4"]
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert runner.invoke(app, args + ["--output", str(first)]).exit_code == 0
    assert runner.invoke(app, args + ["--output", str(second)]).exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert _record(first)["params"]["shots"] == 20000

def test_prep_writes_the_amplitude_table(tmp_path):
    rows = tmp_path / "sin4.csv"
    out = tmp_path / "sin4.json"
    result = runner.invoke(app, ["prep", "--loader", "sin4", "--n", "5", "--csv", str(rows), "--output", str(out)])
    assert result.exit_code == 0
    lines = rows.read_text().splitlines()
    assert len(lines) == 33
    assert lines[0] == "basis,re,im,prob"
    assert _record(out)["result"]["qubits"] == 5

def test_dict_command(tmp_path):
    rows = tmp_path / "dict.csv"
    out = tmp_path / "dict.json"
    result = runner.invoke(app, ["dict", "--poly", COUNTING, "--n", "3", "--m", "3", "--csv", str(rows), "--output", str(out)])
    assert result.exit_code == 0
    assert _record(out)["result"]["pairs"] == [[0, 0], [1, 0], [2, 2], [3, 2], [4, 0], [5, -3], [6, 1], [7, -2]]
    assert len(rows.read_text().splitlines()) == 9

def test_dict_from_a_table_file(tmp_path):
    table = tmp_path / "values.csv"
    table.write_text("k,value\n0,1\n1,3\n2,0\n3,2\n")
    out = tmp_path / "dict.json"
    result = runner.invoke(app, ["dict", "--table", str(table), "--n", "2", "--m", "3", "--output", str(out)])
    assert result.exit_code == 0
    assert _record(out)["result"]["pairs"] == [[0, 1], [1, 3], [2, 0], [3, 2]]

def test_var_command(tmp_path):
    out = tmp_path / "var.json"
    result = runner.invoke(app, ["var", "--n", "3", "--alpha", "0.5", "--output", str(out)])
    assert result.exit_code == 0
    assert _record(out)["result"]["cutoff"] == 4

def test_validation_errors_exit_with_2():
    result = runner.invoke(app, ["count", "--poly", COUNTING, "--n", "3", "--m", "3"])
    assert result.exit_code == 2
    assert '"error": "InputValidationError"' in result.output
    assert '"exit_code": 2' in result.output

def test_value_overflow_exits_with_3():
    result = runner.invoke(app, ["payoff", "--poly", PRICE, "--n", "3", "--m", "4", "--strike", "0", "--shifted"])
    assert result.exit_code == 3
    assert '"error": "ValueOverflowError"' in result.output

def test_unreachable_confidence_exits_with_4(tmp_path):
    weights = tmp_path / "weights.csv"
    weights.write_text("k,value\n0,0.25\n1,0.25\n2,0\n3,0\n")
    result = runner.invoke(app, ["var", "--loader", f"file:{weights}", "--n", "2", "--alpha", "0.9"])
    assert result.exit_code == 4
    assert '"exit_code": 4' in result.output

def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert result.output.startswith("pyqip ")

def test_config_set_show_unset():
    assert runner.invoke(app, ["config", "set", "shots", "1234"]).exit_code == 0
    assert ConfigService.get("shots") == 1234
    shown = runner.invoke(app, ["config", "show"])
    assert '"shots": 1234' in shown.output
    assert runner.invoke(app, ["config", "unset", "shots"]).exit_code == 0
    assert not ConfigService.has("shots")

@pytest.mark.parametrize("args", [["config", "set", "colour", "red"], ["config", "set", "shots", "many"]])
def test_config_rejects_bad_input(args):
    assert runner.invoke(app, args).exit_code == 2

def test_stored_defaults_reach_the_record(tmp_path):
    runner.invoke(app, ["config", "set", "seed", "17"])
    runner.invoke(app, ["config", "set", "output_dir", str(tmp_path / "results")])
    result = runner.invoke(app, ["rational", "--output", "rational.json"])
    assert result.exit_code == 0
    record = _record(tmp_path / "results" / "rational.json")
    assert record["params"]["seed"] == 17

def test_run_from_a_config_file(tmp_path):
    out = tmp_path / "out.json"
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"command": "count", "n": 3, "m": 3, "poly": COUNTING, "v0": 0, "output": str(out)}))
    result = runner.invoke(app, ["run", "--config", str(config)])
    assert result.exit_code == 0
    assert _record(out)["result"]["count"] == 3

def test_run_reports_missing_config(tmp_path):
    result = runner.invoke(app, ["run", "--config", str(tmp_path / "missing.json")])
    assert result.exit_code == 2

def test_paper_suite_command(tmp_path):
    out = tmp_path / "suite.json"
    result = runner.invoke(app, ["paper-suite", "--output", str(out)])
    assert result.exit_code == 0
    assert "weighted_sum" in result.output
    record = _record(out)
    assert record["all_within_tolerance"] is True
    rows = {(row["instance"], row["quantity"]): row for row in record["rows"]}
    assert rows[("expected-value", "weighted_sum")]["reference"] == 30.76777
    assert rows[("counting", "count_v0_0")]["computed"] == 3.0

@pytest.mark.parametrize("extra", [[], ["--shifted"]])
def test_payoff_command(tmp_path, extra):
    out = tmp_path / "payoff.json"
    result = runner.invoke(app, ["payoff", "--poly", PRICE, "--n", "3", "--m", "4", "--strike", "7", "--output", str(out)] + extra)
    assert result.exit_code == 0
    record = _record(out)
    assert record["params"]["strike"] == 7
    assert_allclose(record["result"]["quantum"], 5.41421, atol=1e-5)
    assert_allclose(record["result"]["oracle"], 5.41421, atol=1e-5)

def test_linear_exact_command(tmp_path):
    out = tmp_path / "linear.json"
    result = runner.invoke(app, ["linear-exact", "--n", "3", "--intercept", "1", "--slope", "2", "--output", str(out)])
    assert result.exit_code == 0
    record = _record(out)["result"]
    assert_allclose(record["quantum"], 36.0, atol=1e-4)
    assert_allclose(record["oracle"], 36.0, atol=1e-9)
    assert (record["intercept"], record["slope"]) == (1.0, 2.0)

def test_linear_approx_command(tmp_path):
    out = tmp_path / "linear.json"
    result = runner.invoke(app, ["linear-approx", "--n", "3", "--c", "0.1", "--output", str(out)])
    assert result.exit_code == 0
    record = _record(out)["result"]
    assert_allclose(record["quantum"], 15.99768, atol=1e-2)
    assert_allclose(record["oracle"], 16.0, atol=1e-9)
    assert record["scale"] == 0.1

def test_woerner_egger_command(tmp_path):
    out = tmp_path / "we.json"
    result = runner.invoke(app, ["we", "--n", "3", "--c", "0.05", "--output", str(out)])
    assert result.exit_code == 0
    record = _record(out)["result"]
    assert_allclose(record["quantum"], 4.0, atol=1e-2)
    assert record["we_mode"] == "quantum"
