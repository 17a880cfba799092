import os
import json
from typing import Any, Optional

class ConfigService:
    """
    Persistent user defaults stored as a JSON dict in ~/.pyqip/config.json.

    Known keys: output_dir, shots, seed, jobs. The PYQIP_OUTPUT_DIR environment
    variable takes precedence over the stored output_dir.
    """

    CONFIG_DIR = os.path.join(os.path.expanduser("~"), ".pyqip")
    CONFIG_FILE = os.path.join(CONFIG_DIR, "config.json")
    OUTPUT_DIR_ENV = "PYQIP_OUTPUT_DIR"
    KNOWN_KEYS = ("output_dir", "shots", "seed", "jobs")
    _cache: Optional[dict] = None

    @staticmethod
    def get(config_key: str, default: Any = None) -> Any:
        return ConfigService.get_all().get(config_key, default)

    @staticmethod
    def get_all() -> dict:
        if ConfigService._cache is not None:
            return ConfigService._cache

        if not os.path.exists(ConfigService.CONFIG_FILE):
            ConfigService._cache = {}
            return ConfigService._cache

        with open(ConfigService.CONFIG_FILE, "r", encoding="utf-8") as f:
            ConfigService._cache = json.load(f)

        return ConfigService._cache

    @staticmethod
    def set(config_key: str, value: Any) -> None:
        config = dict(ConfigService.get_all())
        config[config_key] = value
        ConfigService.set_all(config)

    @staticmethod
    def set_all(config: dict) -> None:
        os.makedirs(ConfigService.CONFIG_DIR, exist_ok=True)
        with open(ConfigService.CONFIG_FILE, "w", encoding="utf-8") as f:
            json.dump(config, f, indent=2, sort_keys=True)

        ConfigService._cache = config

    @staticmethod
    def has(config_key: str) -> bool:
        return config_key in ConfigService.get_all()

    @staticmethod
    def remove(config_key: str) -> bool:
        config = dict(ConfigService.get_all())
        if config_key not in config:
            return False
        del config[config_key]
        ConfigService.set_all(config)
        return True

    @staticmethod
    def output_dir() -> Optional[str]:
        return os.getenv(ConfigService.OUTPUT_DIR_ENV) or ConfigService.get("output_dir")

    @staticmethod
    def resolve_output_path(path: Optional[str]) -> Optional[str]:
        if path is None or os.path.isabs(path):
            return path
        base = ConfigService.output_dir()
        return os.path.join(base, path) if base else path
