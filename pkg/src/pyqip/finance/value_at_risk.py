import numpy as np
from dataclasses import dataclass
from typing import Optional
from pyqip.common import EstimateMode
from pyqip.errors import InputValidationError, UnreachableConfidenceError
from pyqip.innerprod import DEFAULT_SHOTS, EstimateResult, WeightSpec, weighted_sum_simple
from pyqip.logger import logger
from pyqip.stateprep import quantile_state
from .models import VarQuery

# Cumulative masses are compared against alpha with this slack so exact ties count as reached.
CONFIDENCE_TOLERANCE = 1e-10

@dataclass(frozen=True)
class VarResult:
    cutoff: int
    cumulative: float
    queries: int

    def to_dict(self) -> dict:
        return {"cutoff": self.cutoff, "cumulative": float(self.cumulative), "queries": self.queries}

def cumulative_probability(
    weights: WeightSpec,
    cutoff: int,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """sum_{k <= l} w_k through Pattern 1 with B the quantile state of cutoff l."""
    if np.any(weights.vector < 0):
        raise InputValidationError("Cumulative probabilities need non-negative weights")
    return weighted_sum_simple(weights, None, quantile_state(cutoff, weights.num_qubits), mode=mode, shots=shots, seed=seed)

def value_at_risk(
    query: VarQuery,
    num_qubits: Optional[int] = None,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> VarResult:
    """Smallest l with cumulative mass >= alpha, by binary search over l."""
    weights = query.weights
    if num_qubits is not None and num_qubits != weights.num_qubits:
        raise InputValidationError(f"Weights cover {weights.num_qubits} qubits, expected {num_qubits}")
    cache: dict[int, float] = {}

    def cumulative(cutoff: int) -> float:
        if cutoff not in cache:
            cache[cutoff] = cumulative_probability(weights, cutoff, mode, shots, seed).weighted_sum
            logger().debug(f"Cumulative mass up to l={cutoff}: {cache[cutoff]:.10f}")
        return cache[cutoff]

    low, high = 0, weights.size - 1
    total = cumulative(high)
    if total < query.alpha - CONFIDENCE_TOLERANCE:
        raise UnreachableConfidenceError(query.alpha, total)

    while low < high:
        middle = (low + high) // 2
        if cumulative(middle) >= query.alpha - CONFIDENCE_TOLERANCE:
            high = middle
        else:
            low = middle + 1
    return VarResult(cutoff=low, cumulative=cumulative(low), queries=len(cache))

def cumulative_oracle(weights: WeightSpec, cutoff: int) -> float:
    return float(np.sum(weights.vector[: cutoff + 1]))

def value_at_risk_oracle(weights: WeightSpec, alpha: float) -> int:
    cumulative = np.cumsum(weights.vector)
    reached = np.nonzero(cumulative >= alpha - CONFIDENCE_TOLERANCE)[0]
    if reached.size == 0:
        raise UnreachableConfidenceError(alpha, float(cumulative[-1]))
    return int(reached[0])
