import logging
import os
from typing import Optional, TextIO

LOG_LEVEL_ENV = "PYQIP_LOG_LEVEL"
_LOGGER_NAME = "pyqip"
_logger: Optional[logging.Logger] = None

class PyqipFormatter(logging.Formatter):
    """`[HH:MM:SS] message` for INFO records, `[HH:MM:SS] [LEVEL] message` for the rest."""

    _INFO_FMT = "[%(asctime)s] %(message)s"
    _LEVEL_FMT = "[%(asctime)s] [%(levelname)s] %(message)s"

    def __init__(self):
        super().__init__(datefmt="%H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        self._style._fmt = self._INFO_FMT if record.levelno == logging.INFO else self._LEVEL_FMT
        return super().format(record)

def _default_level() -> int | str:
    return os.getenv(LOG_LEVEL_ENV, "").upper() or logging.INFO

def setup_logger(level: Optional[int | str] = None, stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Creates the "pyqip" logger on first use; later calls only change its level.

    The level falls back to PYQIP_LOG_LEVEL, then INFO. Records go to `stream`,
    stderr by default, and never propagate to the root logger.
    """
    global _logger

    if _logger is None:
        _logger = logging.getLogger(_LOGGER_NAME)
        handler = logging.StreamHandler(stream)
        handler.setFormatter(PyqipFormatter())
        _logger.addHandler(handler)
        _logger.propagate = False
    _logger.setLevel(level if level is not None else _default_level())
    return _logger

def logger() -> logging.Logger:
    return _logger if _logger is not None else setup_logger()

class ProcessLogger:
    """Logs numbered steps of a multi-step job, e.g. '[2/2] paper-suite: comparing against reference values'."""

    def __init__(self, total_steps: int, job: Optional[str] = None):
        self._current_step = 1
        self._total_steps = total_steps
        self._prefix = f"{job}: " if job else ""

    def step(self, msg: str) -> None:
        logger().info(f"[{self._current_step}/{self._total_steps}] {self._prefix}{msg}")
        self._current_step += 1
