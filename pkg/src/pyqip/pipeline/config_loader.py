import json
import os
from pydantic import ValidationError
from pyqip.common import ConfigService
from pyqip.errors import InputValidationError
from .run_config import RunConfig

_STORED_DEFAULTS = ("shots", "seed", "jobs")

def build_run_config(**fields) -> RunConfig:
    """
    Creates a RunConfig from explicit values. Fields left as None fall back to
    the stored user defaults, then to the model defaults.
    """
    values = {key: value for key, value in fields.items() if value is not None}
    for key in _STORED_DEFAULTS:
        if key not in values and ConfigService.has(key):
            values[key] = ConfigService.get(key)
    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise InputValidationError(f"Invalid config: {e}")

class JsonConfigLoader:
    def __init__(self, json_path: str) -> None:
        if not os.path.exists(json_path):
            raise InputValidationError(f"Config file not found: {json_path}")
        with open(json_path, "r", encoding="utf-8") as f:
            try:
                self._data = json.load(f)
            except json.JSONDecodeError as e:
                raise InputValidationError(f"Config file {json_path} is not valid JSON: {e}")
        if not isinstance(self._data, dict):
            raise InputValidationError(f"Config file {json_path} must hold a JSON object")
        self._base_path = os.path.dirname(os.path.abspath(json_path))

    def load(self) -> RunConfig:
        data = dict(self._data)
        for key in ("table",):
            if data.get(key) and not os.path.isabs(data[key]):
                data[key] = os.path.join(self._base_path, data[key])
        for key in ("loader", "b_loader"):
            value = data.get(key)
            if isinstance(value, str) and value.startswith("file:") and not os.path.isabs(value[5:]):
                data[key] = "file:" + os.path.join(self._base_path, value[5:])
        return build_run_config(**data)
