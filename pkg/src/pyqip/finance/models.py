import math
import numpy as np
from dataclasses import dataclass, field
from typing import Optional, Sequence
from pyqip.errors import InputValidationError
from pyqip.innerprod import HashSpec, WeightSpec
from pyqip.polynomial import BinaryPolynomial, FunctionTable, from_table

@dataclass(frozen=True)
class PayoffSpec:
    """Call-style payoff sum_{f(k) >= K} w_k (f(k) - K)."""

    strike: int
    function: BinaryPolynomial
    weights: WeightSpec

    def __post_init__(self):
        if int(self.strike) != self.strike:
            raise InputValidationError(f"Strike must be an integer, got {self.strike}")
        if self.function.num_vars != self.weights.num_qubits:
            raise InputValidationError(
                f"Function has {self.function.num_vars} variables but weights cover {self.weights.num_qubits} qubits"
            )

    @staticmethod
    def from_table(strike: int, table: FunctionTable, weights: WeightSpec) -> "PayoffSpec":
        return PayoffSpec(strike, from_table(table), weights)

    def hash_spec(self, value_qubits: int) -> HashSpec:
        return HashSpec.call_payoff(value_qubits, self.strike)

@dataclass(frozen=True)
class VarQuery:
    """A price distribution w_k >= 0 and the confidence level alpha of the quantile search."""

    weights: WeightSpec
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise InputValidationError(f"alpha must lie in (0, 1), got {self.alpha}")
        if np.any(self.weights.vector < 0):
            raise InputValidationError("Value at risk needs non-negative weights")

@dataclass(frozen=True)
class WoernerEggerParams:
    """
    Scale c, probabilities p_k and function values f(k).

    `values` must lie in [-1, 1]. `values=None` selects the canonical linear
    function f(k) = -1 + 2k/(N-1).
    """

    scale: float
    probabilities: tuple[float, ...]
    values: Optional[tuple[float, ...]] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "probabilities", tuple(float(p) for p in self.probabilities))
        size = len(self.probabilities)
        if size < 2 or size & (size - 1):
            raise InputValidationError(f"Probability count must be a power of two >= 2, got {size}")
        if not 0.0 < self.scale <= 0.5:
            raise InputValidationError(f"Scale c must lie in (0, 0.5], got {self.scale}")
        if min(self.probabilities) < 0 or abs(sum(self.probabilities) - 1.0) > 1e-10:
            raise InputValidationError("Probabilities must be non-negative and sum to 1")
        if self.values is not None:
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
            if len(self.values) != size:
                raise InputValidationError(f"Expected {size} function values, got {len(self.values)}")
            if any(not -1.0 <= v <= 1.0 for v in self.values):
                raise InputValidationError("Function values must lie in [-1, 1]")

    @property
    def num_qubits(self) -> int:
        return len(self.probabilities).bit_length() - 1

    @property
    def function_values(self) -> np.ndarray:
        if self.values is not None:
            return np.array(self.values)
        size = len(self.probabilities)
        return -1.0 + 2.0 * np.arange(size) / (size - 1)

    @staticmethod
    def from_weights(scale: float, weights: Sequence[float], values: Optional[Sequence[float]] = None) -> "WoernerEggerParams":
        """Normalizes non-negative weights into probabilities."""
        weights = np.asarray(weights, dtype=np.float64)
        total = float(weights.sum())
        if not math.isfinite(total) or total <= 0:
            raise InputValidationError("Weights must have a positive sum")
        return WoernerEggerParams(scale, tuple(weights / total), None if values is None else tuple(values))

