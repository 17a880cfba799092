import logging
import typer
from typing import Optional
from pyqip.common import Command
from pyqip.errors import PyqipError
from pyqip.logger import setup_logger
from pyqip.pipeline import JsonConfigLoader
from .options import OUTPUT_OPTION, VERBOSE_OPTION
from .output import execute, fail, run

suite_app = typer.Typer()

@suite_app.command("paper-suite", help="Run every regression instance and print computed values next to the reference values.")
def paper_suite(
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Worker processes (default 1 or the stored config)", show_default=False),
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(verbose, command=Command.PAPER_SUITE, jobs=jobs, output=output)

@suite_app.command("run", help="Run a command described by a JSON config file.")
def run_config(
    config_file: str = typer.Option(..., "--config", help="Config JSON file path", show_default=False),
    verbose: bool = VERBOSE_OPTION,
):
    setup_logger(logging.DEBUG if verbose else None)
    try:
        config = JsonConfigLoader(config_file).load()
    except PyqipError as e:
        fail(e.to_record())
    run(config)
