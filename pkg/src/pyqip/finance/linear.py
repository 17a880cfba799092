from pyqip.common import EstimateMode
from pyqip.errors import InputValidationError
from pyqip.innerprod import DEFAULT_SHOTS, EstimateResult, WeightSpec, weighted_sum_oracle, weighted_sum_simple
from pyqip.stateprep import identity_ramp, linear_trig
from .expected_value import resolve_weights

def ramp_weighted_sum(
    weights: str | WeightSpec,
    key_qubits: int,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """sum_k w_k k through Pattern 1 with B = L_n."""
    spec = resolve_weights(weights, key_qubits)
    return weighted_sum_simple(spec, None, identity_ramp(key_qubits), mode=mode, shots=shots, seed=seed)

def linear_expected_exact(
    intercept: float,
    slope: float,
    key_qubits: int,
    weights: str | WeightSpec = "sin4",
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> float:
    """sum_k w_k (intercept + slope k) = intercept sum_k w_k + slope sum_k w_k k."""
    spec = resolve_weights(weights, key_qubits)
    moment = ramp_weighted_sum(spec, key_qubits, mode, shots, seed).weighted_sum
    return intercept * spec.total() + slope * moment

def trig_weighted_sum(
    scale: float,
    key_qubits: int,
    weights: str | WeightSpec = "sin4",
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """
    Approximates sum_k w_k k with B = T_theta, theta = c/(2N).

    sin(k theta) ~ k theta, so E/(a b) with b = theta/sqrt(N) approaches the
    exact moment as c goes to 0; for sin4 weights the rescale is sqrt(3/2) N^2/c.
    """
    if not 0.0 < scale <= 0.5:
        raise InputValidationError(f"Scale c must lie in (0, 0.5], got {scale}")
    spec = resolve_weights(weights, key_qubits)
    theta = scale / (2 * spec.size)
    return weighted_sum_simple(spec, None, linear_trig(theta, key_qubits), mode=mode, shots=shots, seed=seed)

def linear_expected_approx(
    scale: float,
    key_qubits: int,
    weights: str | WeightSpec = "sin4",
    intercept: float = 0.0,
    slope: float = 1.0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> float:
    spec = resolve_weights(weights, key_qubits)
    moment = trig_weighted_sum(scale, key_qubits, spec, mode, shots, seed).weighted_sum
    return intercept * spec.total() + slope * moment

def linear_oracle(intercept: float, slope: float, weights: WeightSpec) -> float:
    return weighted_sum_oracle(weights, [intercept + slope * k for k in range(weights.size)])
