from .specs import WeightSpec, HashSpec
from .estimate_result import EstimateResult
from .amplitude_estimator import estimate_magnitude
from .patterns import (
    DEFAULT_SHOTS,
    simple_program,
    generalized_program,
    simple_inner_product,
    generalized_inner_product,
    read_amplitude,
    weighted_sum_simple,
    weighted_hashed_sum,
)
from .applications import expected_value_canonical, mean_value, restricted_weighted_sum
from .oracles import hashed_sum_oracle, weighted_sum_oracle

__all__ = [
    "WeightSpec",
    "HashSpec",
    "EstimateResult",
    "estimate_magnitude",
    "DEFAULT_SHOTS",
    "simple_program",
    "generalized_program",
    "simple_inner_product",
    "generalized_inner_product",
    "read_amplitude",
    "weighted_sum_simple",
    "weighted_hashed_sum",
    "expected_value_canonical",
    "mean_value",
    "restricted_weighted_sum",
    "hashed_sum_oracle",
    "weighted_sum_oracle",
]
