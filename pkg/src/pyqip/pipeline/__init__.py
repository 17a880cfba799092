from .run_config import BaseConfigModel, RunConfig
from .config_loader import JsonConfigLoader, build_run_config
from .paper_suite import PAPER_CASES, SuiteCase, SuiteRow, evaluate_case, run_paper_suite, suite_table
from .command_runner import CommandOutcome, CommandRunner

__all__ = [
    "BaseConfigModel",
    "RunConfig",
    "JsonConfigLoader",
    "build_run_config",
    "PAPER_CASES",
    "SuiteCase",
    "SuiteRow",
    "evaluate_case",
    "run_paper_suite",
    "suite_table",
    "CommandOutcome",
    "CommandRunner",
]
