import json
import logging
import pytest
from numpy.testing import assert_allclose
from pyqip.common import Command, ConfigService, EstimateMode
from pyqip.errors import InputValidationError
from pyqip.logger import PyqipFormatter
from pyqip.pipeline import (
    PAPER_CASES,
    CommandRunner,
    JsonConfigLoader,
    RunConfig,
    build_run_config,
    evaluate_case,
    run_paper_suite,
    suite_table,
)

PRICE = "7 + 4*k1 - 5*k0*k1 - 2*k0*k2"
COUNTING = "2*k1 - k0*k1 - 3*k0*k2"

@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    config_dir = tmp_path / "config"
    monkeypatch.setattr(ConfigService, "CONFIG_DIR", str(config_dir))
    monkeypatch.setattr(ConfigService, "CONFIG_FILE", str(config_dir / "config.json"))
    monkeypatch.setattr(ConfigService, "_cache", None)
    monkeypatch.delenv(ConfigService.OUTPUT_DIR_ENV, raising=False)

@pytest.mark.parametrize("fields", [
    {"command": "count", "n": 3, "m": 3, "poly": COUNTING},
    {"command": "count", "n": 3, "m": 3, "v0": 0},
    {"command": "dict", "n": 3, "m": 4, "poly": PRICE, "table": "values.csv"},
    {"command": "expect", "n": 3, "m": 4, "poly": PRICE, "csv": "rows.csv"},
    {"command": "var", "n": 3, "alpha": 1.0},
    {"command": "linear-approx", "n": 3, "scale": 0.7},
    {"command": "we", "n": 3, "scale": 0.1, "lower": 1.0},
    {"command": "we", "n": 3, "scale": 0.1, "lower": 2.0, "upper": 1.0},
    {"command": "prep", "loader": "sin4", "n": 0},
    {"command": "rational", "unknown": 1},
])
def test_invalid_configs_are_rejected(fields):
    with pytest.raises(InputValidationError) as error:
        build_run_config(**fields)
    assert error.value.exit_code == 2

def test_run_config_is_frozen_and_echoes_its_parameters():
    config = build_run_config(command=Command.COUNT, n=3, m=3, poly=COUNTING, v0=0, output="out.json", jobs=None)
    params = config.parameters()
    assert params["command"] == "count"
    assert params["v0"] == 0
    assert params["shots"] == 8192
    assert "output" not in params and "jobs" not in params and "table" not in params
    with pytest.raises(Exception):
        config.n = 4

def test_stored_defaults_fill_unset_sampling_fields():
    ConfigService.set("shots", 1234)
    ConfigService.set("seed", 9)
    config = build_run_config(command="rational")
    assert (config.shots, config.seed) == (1234, 9)
    assert build_run_config(command="rational", shots=10).shots == 10

def test_json_config_resolves_paths_next_to_the_file(tmp_path):
    (tmp_path / "values.csv").write_text("k,value\n0,1\n1,3\n2,0\n3,2\n")
    config_path = tmp_path / "run.json"
    config_path.write_text(json.dumps({"command": "dict", "n": 2, "m": 3, "table": "values.csv", "loader": "file:w.csv"}))
    config = JsonConfigLoader(str(config_path)).load()
    assert config.table == str(tmp_path / "values.csv")
    assert config.loader == "file:" + str(tmp_path / "w.csv")

@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_json_config_rejects_malformed_files(tmp_path, content):
    config_path = tmp_path / "run.json"
    config_path.write_text(content)
    with pytest.raises(InputValidationError):
        JsonConfigLoader(str(config_path))

def test_json_config_requires_the_file(tmp_path):
    with pytest.raises(InputValidationError):
        JsonConfigLoader(str(tmp_path / "missing.json"))

def test_count_record():
    outcome = CommandRunner(RunConfig(command=Command.COUNT, n=3, m=3, poly=COUNTING, v0=0)).run()
    assert outcome.record["command"] == "count"
    assert outcome.record["result"]["count"] == 3
    assert outcome.record["result"]["oracle"] == 3
    assert outcome.rows is None

def test_expect_record():
    outcome = CommandRunner(RunConfig(command=Command.EXPECT, n=3, m=4, poly=PRICE)).run()
    result = outcome.record["result"]
    assert_allclose(result["quantum"], 30.76777, atol=1e-3)
    assert result["polynomial"] == "7 + 4*k1 - 5*k0*k1 - 2*k0*k2"

def test_expect_record_with_a_table(tmp_path):
    table = tmp_path / "values.csv"
    table.write_text("k,value\n" + "\n".join(f"{k},{v}" for k, v in enumerate((7, 7, 11, 11, 7, 5, 6, 4))) + "\n")
    outcome = CommandRunner(RunConfig(command=Command.EXPECT, n=3, m=4, table=str(table))).run()
    assert_allclose(outcome.record["result"]["quantum"], 30.76777, atol=1e-3)

def test_prep_rows():
    outcome = CommandRunner(RunConfig(command=Command.PREP, loader="sin4", n=5)).run()
    assert len(outcome.rows) == 32
    assert_allclose(sum(row["prob"] for row in outcome.rows), 1.0)
    assert outcome.record["result"]["label"] == "N2"

def test_var_uses_file_weights_as_given(tmp_path):
    weights = tmp_path / "weights.csv"
    weights.write_text("k,value\n0,0.25\n1,0.25\n2,0\n3,0\n")
    runner = CommandRunner(RunConfig(command=Command.VAR, n=2, alpha=0.4, loader=f"file:{weights}"))
    result = runner.run().record["result"]
    assert result["cutoff"] == 1
    assert result["oracle_cutoff"] == 1

def test_woerner_egger_record():
    result = CommandRunner(RunConfig(command=Command.WE, n=3, scale=0.05)).run().record["result"]
    assert_allclose(result["quantum"], 4.0, atol=1e-2)
    assert_allclose(result["oracle"], 4.0, atol=1e-9)

def test_sampled_records_are_reproducible():
    config = RunConfig(command=Command.EXPECT, n=3, m=4, poly=PRICE, mode=EstimateMode.SAMPLED, shots=50_000, seed=11)
    assert CommandRunner(config).run().record == CommandRunner(config).run().record

def test_every_regression_instance_is_within_tolerance():
    rows = run_paper_suite()
    assert len(rows) == len(PAPER_CASES)
    failed = [row.to_dict() for row in rows if not row.within_tolerance]
    assert failed == []

def test_parallel_suite_keeps_case_order():
    cases = PAPER_CASES[:4]
    assert run_paper_suite(jobs=2, cases=cases) == run_paper_suite(jobs=1, cases=cases)

def test_suite_row_and_table():
    row = evaluate_case(PAPER_CASES[1])
    assert row.instance == "expected-value"
    assert row.quantity == "weighted_sum"
    assert row.to_dict()["reference"] == 30.76777
    table = suite_table([row])
    assert "weighted_sum" in table
    assert table.splitlines()[-1].endswith("yes")

def test_dict_pairs_follow_the_window_of_the_function():
    price = CommandRunner(RunConfig(command=Command.DICT, n=3, m=4, poly=PRICE)).run()
    assert [value for _, value in price.record["result"]["pairs"]] == [7, 7, 11, 11, 7, 5, 6, 4]
    counting = CommandRunner(RunConfig(command=Command.DICT, n=3, m=3, poly=COUNTING)).run()
    assert [value for _, value in counting.record["result"]["pairs"]] == [0, 0, 2, 2, 0, -3, 1, -2]
    assert len(counting.rows) == 8

def test_log_records_show_the_level_unless_info():
    formatter = PyqipFormatter()
    info = logging.LogRecord("pyqip", logging.INFO, __file__, 1, "suite done", None, None)
    warning = logging.LogRecord("pyqip", logging.WARNING, __file__, 1, "residue", None, None)
    assert formatter.format(info).endswith("] suite done")
    assert "[INFO]" not in formatter.format(info)
    assert formatter.format(warning).endswith("] [WARNING] residue")
