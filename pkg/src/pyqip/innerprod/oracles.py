import numpy as np
from pyqip.common import BitOrder
from pyqip.polynomial import BinaryPolynomial, to_table
from .specs import HashSpec, WeightSpec

def hashed_sum_oracle(
    weights: WeightSpec,
    hashes: HashSpec,
    polynomial: BinaryPolynomial,
    bit_order: BitOrder = BitOrder.MSB0,
) -> float:
    """Classical sum_k w_k h_{f(k) mod M}."""
    values = np.array(to_table(polynomial, bit_order).values, dtype=np.int64)
    raw = np.mod(values, 1 << hashes.num_qubits)
    return float(np.dot(weights.vector, hashes.vector[raw]))

def weighted_sum_oracle(weights: WeightSpec, values) -> float:
    """Classical sum_k w_k f(k)."""
    return float(np.dot(weights.vector, np.asarray(values, dtype=np.float64)))
