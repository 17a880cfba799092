import csv
import json
import logging
import os
import typer
from pyqip.common import ConfigService
from pyqip.errors import PyqipError
from pyqip.logger import logger, setup_logger
from pyqip.pipeline import CommandOutcome, CommandRunner, RunConfig, build_run_config

def execute(verbose: bool = False, **fields) -> None:
    """Validates the fields into a RunConfig, runs it and emits the result, exiting with the error's code on failure."""
    setup_logger(logging.DEBUG if verbose else None)
    try:
        run(build_run_config(**fields))
    except PyqipError as e:
        fail(e.to_record())

def run(config: RunConfig) -> None:
    try:
        outcome = CommandRunner(config).run()
        emit(outcome, config)
    except PyqipError as e:
        fail(e.to_record())
    except OSError as e:
        fail({"error": type(e).__name__, "message": str(e), "exit_code": 1})

def emit(outcome: CommandOutcome, config: RunConfig) -> None:
    text = json.dumps(outcome.record, indent=2, sort_keys=True)
    if outcome.table is not None:
        typer.echo(outcome.table)

    output = ConfigService.resolve_output_path(config.output)
    if output:
        _write_text(output, text + "\n")
        logger().info(f"Result record written to {output}")
    elif outcome.table is None:
        typer.echo(text)

    csv_path = ConfigService.resolve_output_path(config.csv)
    if csv_path and outcome.rows is not None:
        write_rows_csv(csv_path, outcome.rows)
        logger().info(f"{len(outcome.rows)} rows written to {csv_path}")

def write_rows_csv(path: str, rows: list[dict]) -> None:
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=list(rows[0].keys()) if rows else [], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)

def fail(record: dict) -> None:
    typer.echo(json.dumps(record, sort_keys=True), err=True)
    raise typer.Exit(code=record["exit_code"])

def _write_text(path: str, text: str) -> None:
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)

def _ensure_parent(path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
