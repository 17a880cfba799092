import numpy as np
from pyqip.common import BitOrder
from pyqip.errors import InputValidationError
from .binary_polynomial import BinaryPolynomial, Monomial
from .function_table import FunctionTable, key_bits, variable_key_position

def indicator_polynomial(key: int, num_vars: int, bit_order: BitOrder = BitOrder.LSB0) -> BinaryPolynomial:
    """
    Polynomial equal to 1 at the bit pattern of `key` and 0 elsewhere.

    Expands prod_j ((2k_j - 1) x_j + 1 - k_j): set bits contribute x_j, clear
    bits contribute (1 - x_j).
    """
    if num_vars < 1 or not 0 <= key < (1 << num_vars):
        raise InputValidationError(f"Key {key} out of range for n={num_vars}")
    terms: dict[Monomial, int] = {(): 1}
    for j, bit in enumerate(key_bits(key, num_vars, bit_order)):
        expanded: dict[Monomial, int] = {}
        for monomial, coefficient in terms.items():
            with_variable = monomial + (j,)
            expanded[with_variable] = expanded.get(with_variable, 0) + (coefficient if bit else -coefficient)
            if not bit:
                expanded[monomial] = expanded.get(monomial, 0) + coefficient
        terms = expanded
    return BinaryPolynomial(num_vars, terms)

def from_table(table: FunctionTable) -> BinaryPolynomial:
    """Monomial coefficients of a table through the Moebius transform over variable subsets."""
    n = table.num_vars
    coefficients = table.as_array()[_mask_to_key(n, table.bit_order)]
    for j in range(n):
        blocks = coefficients.reshape(-1, 2, 1 << j)
        blocks[:, 1, :] -= blocks[:, 0, :]
    return BinaryPolynomial(n, {_monomial(mask, n): int(c) for mask, c in enumerate(coefficients) if c})

def from_table_by_indicators(table: FunctionTable) -> BinaryPolynomial:
    """Same result as `from_table`, built as sum_k f(k) * indicator(k)."""
    result = BinaryPolynomial.zero(table.num_vars)
    for key, value in enumerate(table.values):
        if value:
            result = result + indicator_polynomial(key, table.num_vars, table.bit_order).scaled(value)
    return result

def to_table(polynomial: BinaryPolynomial, bit_order: BitOrder = BitOrder.MSB0) -> FunctionTable:
    n = polynomial.num_vars
    by_mask = np.zeros(1 << n, dtype=np.int64)
    for monomial, coefficient in polynomial.terms.items():
        by_mask[sum(1 << j for j in monomial)] = coefficient
    for j in range(n):
        blocks = by_mask.reshape(-1, 2, 1 << j)
        blocks[:, 1, :] += blocks[:, 0, :]
    values = np.zeros(1 << n, dtype=np.int64)
    values[_mask_to_key(n, bit_order)] = by_mask
    return FunctionTable(n, tuple(int(v) for v in values), bit_order)

def _mask_to_key(num_vars: int, bit_order: BitOrder) -> np.ndarray:
    """Entry `mask` is the key whose variable assignment is x_j = bit j of mask."""
    keys = np.zeros(1 << num_vars, dtype=np.int64)
    for mask in range(1 << num_vars):
        keys[mask] = sum(
            1 << variable_key_position(j, num_vars, bit_order)
            for j in range(num_vars)
            if (mask >> j) & 1
        )
    return keys

def _monomial(mask: int, num_vars: int) -> Monomial:
    return tuple(j for j in range(num_vars) if (mask >> j) & 1)
