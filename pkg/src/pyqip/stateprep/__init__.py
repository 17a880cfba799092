from .prepared_operator import PreparedOperator
from .amplitude_loader import exact_amplitudes, pattern_controlled_ry
from .fourier_loaders import raised_cosine, sin4, sin8
from .linear_loaders import (
    uniform_operator,
    identity_ramp,
    linear_trig,
    quantile_state,
    basis_operator,
    discretized_normal,
)
from .loader_factory import LoaderFactory
from .approximation_quality import matched_normal_deviation

__all__ = [
    "PreparedOperator",
    "exact_amplitudes",
    "pattern_controlled_ry",
    "raised_cosine",
    "sin4",
    "sin8",
    "uniform_operator",
    "identity_ramp",
    "linear_trig",
    "quantile_state",
    "basis_operator",
    "discretized_normal",
    "LoaderFactory",
    "matched_normal_deviation",
]
