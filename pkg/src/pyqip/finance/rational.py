import numpy as np
from dataclasses import dataclass
from pyqip.common import EstimateMode
from pyqip.errors import InputValidationError
from pyqip.innerprod import DEFAULT_SHOTS, EstimateResult, WeightSpec, weighted_sum_simple
from pyqip.stateprep import exact_amplitudes

RATIONAL_KEY_QUBITS = 4

def rational_function(x: float, y: float) -> float:
    """r(x, y) = ((4.01 - x)/(1 + x) + (4.01 - 2y + x)/(1 + y)^2 - 0.344) / 7.856"""
    return ((4.01 - x) / (1 + x) + (4.01 - 2 * y + x) / (1 + y) ** 2 - 0.344) / 7.856

def rational_values() -> np.ndarray:
    """f(k) = r(x, y) with k = 4x + y and x, y in 0..3."""
    keys = np.arange(1 << RATIONAL_KEY_QUBITS)
    return np.array([rational_function(k // 4, k % 4) for k in keys])

@dataclass(frozen=True)
class RationalReport:
    estimate: EstimateResult
    classical: float
    classical_raw: float
    function_norm: float

    @property
    def quantum(self) -> float:
        return self.estimate.weighted_sum

    def to_dict(self) -> dict:
        return {
            **self.estimate.to_dict(),
            "quantum": float(self.quantum),
            "classical": float(self.classical),
            "classical_raw": float(self.classical_raw),
            "function_norm": float(self.function_norm),
            "abs_error": float(abs(self.quantum - self.classical)),
        }

def expected_rational(
    num_qubits: int = RATIONAL_KEY_QUBITS,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> RationalReport:
    """
    Weighted sum of the normalized rational function under w_k = sin^2(k pi/16).

    B loads f/||f|| with b = 1, so the quantum value is sqrt(3N/8) E =
    sum_k w_k f(k)/||f||. The unnormalized sum is reported alongside.
    """
    if num_qubits != RATIONAL_KEY_QUBITS:
        raise InputValidationError(f"The rational instance is defined on {RATIONAL_KEY_QUBITS} qubits, got {num_qubits}")
    weights = WeightSpec.sine_squared(num_qubits)
    values = rational_values()
    norm = float(np.linalg.norm(values))
    b_op = exact_amplitudes(values / norm, num_qubits, label="rational")
    estimate = weighted_sum_simple(weights, None, b_op, b=1.0, mode=mode, shots=shots, seed=seed)
    raw = float(np.dot(weights.vector, values))
    return RationalReport(
        estimate=estimate,
        classical=raw / norm,
        classical_raw=raw,
        function_norm=norm,
    )
