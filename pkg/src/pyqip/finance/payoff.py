import numpy as np
from pyqip.common import BitOrder, EstimateMode
from pyqip.errors import EncodingRangeError, InputValidationError, ValueOverflowError
from pyqip.innerprod import DEFAULT_SHOTS, EstimateResult, HashSpec, weighted_hashed_sum
from pyqip.polynomial import to_table
from .models import PayoffSpec

def payoff_expectation(
    spec: PayoffSpec,
    key_qubits: int,
    value_qubits: int,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """sum_{f(k) >= K} w_k (f(k) - K), reading f(k) unsigned and rectifying it with the hash."""
    _check_dimensions(spec, key_qubits, value_qubits)
    values = to_table(spec.function, bit_order).values
    if min(values) < 0:
        raise EncodingRangeError(
            "Payoff hashes read the value register unsigned; encode f - K with payoff_expectation_shifted instead"
        )
    return weighted_hashed_sum(
        spec.weights,
        spec.hash_spec(value_qubits),
        spec.function,
        bit_order,
        mode,
        shots,
        seed,
    )

def payoff_expectation_shifted(
    spec: PayoffSpec,
    key_qubits: int,
    value_qubits: int,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """
    Same payoff, encoding f - K in the signed window and zeroing the negative half
    with the rectified identity hash.
    """
    _check_dimensions(spec, key_qubits, value_qubits)
    shifted = spec.function.shifted(-spec.strike)
    half = 1 << (value_qubits - 1)
    for key, value in enumerate(to_table(shifted, bit_order).values):
        if not -half <= value < half:
            raise ValueOverflowError(key, value, value_qubits)
    return weighted_hashed_sum(
        spec.weights,
        HashSpec.rectified_identity(value_qubits),
        shifted,
        bit_order,
        mode,
        shots,
        seed,
    )

def payoff_oracle(spec: PayoffSpec, bit_order: BitOrder = BitOrder.MSB0) -> float:
    values = np.array(to_table(spec.function, bit_order).values, dtype=np.float64)
    return float(np.dot(spec.weights.vector, np.maximum(values - spec.strike, 0.0)))

def _check_dimensions(spec: PayoffSpec, key_qubits: int, value_qubits: int) -> None:
    if spec.function.num_vars != key_qubits:
        raise InputValidationError(f"Function has {spec.function.num_vars} variables, expected n={key_qubits}")
    if not 0 <= spec.strike < (1 << value_qubits):
        raise EncodingRangeError(f"Strike {spec.strike} does not fit a {value_qubits}-qubit value register")
