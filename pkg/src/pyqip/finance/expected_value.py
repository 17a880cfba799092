from pyqip.common import BitOrder, EstimateMode
from pyqip.errors import InputValidationError
from pyqip.innerprod import (
    DEFAULT_SHOTS,
    EstimateResult,
    HashSpec,
    WeightSpec,
    expected_value_canonical,
    hashed_sum_oracle,
)
from pyqip.polynomial import BinaryPolynomial

def resolve_weights(weights: str | WeightSpec, num_qubits: int) -> WeightSpec:
    spec = WeightSpec.named(weights, num_qubits) if isinstance(weights, str) else weights
    if spec.num_qubits != num_qubits:
        raise InputValidationError(f"Weights cover {spec.num_qubits} qubits, expected {num_qubits}")
    return spec

def expected_value_discrete(
    polynomial: BinaryPolynomial,
    key_qubits: int,
    value_qubits: int,
    weights: str | WeightSpec = "sin4",
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """sum_k w_k f(k) for a named weight loader (sin4, rcos, sin8, uniform or file:<path>)."""
    if polynomial.num_vars != key_qubits:
        raise InputValidationError(f"Polynomial has {polynomial.num_vars} variables, expected n={key_qubits}")
    spec = resolve_weights(weights, key_qubits)
    return expected_value_canonical(spec, polynomial, value_qubits, bit_order, mode, shots, seed)

def expected_value_oracle(
    polynomial: BinaryPolynomial,
    value_qubits: int,
    weights: str | WeightSpec = "sin4",
    bit_order: BitOrder = BitOrder.MSB0,
) -> float:
    spec = resolve_weights(weights, polynomial.num_vars)
    return hashed_sum_oracle(spec, HashSpec.identity(value_qubits), polynomial, bit_order)
