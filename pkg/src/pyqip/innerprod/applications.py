from typing import Optional, Sequence
from pyqip.common import BitOrder, EstimateMode
from pyqip.polynomial import BinaryPolynomial
from .estimate_result import EstimateResult
from .patterns import DEFAULT_SHOTS, weighted_hashed_sum
from .specs import HashSpec, WeightSpec

def expected_value_canonical(
    weights: WeightSpec,
    polynomial: BinaryPolynomial,
    value_qubits: int,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """sum_k w_k f(k) through Pattern 2 with the identity ramp L_m as B."""
    return weighted_hashed_sum(
        weights,
        HashSpec.identity(value_qubits),
        polynomial,
        bit_order,
        mode,
        shots,
        seed,
    )

def mean_value(
    polynomial: BinaryPolynomial,
    value_qubits: int,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """(1/N) sum_k f(k), with A = H^n."""
    weights = WeightSpec.uniform(polynomial.num_vars)
    result = expected_value_canonical(weights, polynomial, value_qubits, bit_order, mode, shots, seed)
    return result.rescaled(1.0 / weights.size)

def restricted_weighted_sum(
    weights: WeightSpec,
    polynomial: BinaryPolynomial,
    value_qubits: int,
    keys: Optional[Sequence[int]] = None,
    values: Optional[Sequence[int]] = None,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """
    sum of w_k f(k) over k in `keys` with f(k) in `values`.

    Keys outside the selection get weight 0; register values outside the
    selection get hash 0. Values are raw register indices 0..M-1.
    """
    if keys is not None:
        weights = weights.restricted(keys)
    if values is None:
        hashes = HashSpec.identity(value_qubits)
    else:
        hashes = HashSpec.selected_identity(value_qubits, values)
    return weighted_hashed_sum(weights, hashes, polynomial, bit_order, mode, shots, seed)
