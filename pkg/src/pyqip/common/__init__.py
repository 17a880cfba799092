from .types import (
    GateKind,
    BitOrder,
    EstimateMode,
    WoernerEggerMode,
    Command,
)
from .config_service import ConfigService

__all__ = [
    "GateKind",
    "BitOrder",
    "EstimateMode",
    "WoernerEggerMode",
    "Command",
    "ConfigService",
]
