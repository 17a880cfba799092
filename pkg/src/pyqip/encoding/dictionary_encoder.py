import math
from pyqip.common import BitOrder
from pyqip.errors import InputValidationError, ValueOverflowError
from pyqip.logger import logger
from pyqip.polynomial import BinaryPolynomial, FunctionTable, to_table, variable_key_position
from pyqip.sim import CircuitProgram, GateOp, StateVector
from .register_layout import RegisterLayout

def check_value_range(table: FunctionTable, value_qubits: int) -> None:
    """
    Accepts tables whose values all fit the signed window [-M/2, M/2) or all fit
    the unsigned window [0, M) of an m-qubit value register.

    Raises ValueOverflowError naming the first key that breaks the fit.
    """
    size = 1 << value_qubits
    low, high = min(table.values), max(table.values)
    if -size // 2 <= low and high < size // 2:
        return
    if 0 <= low and high < size:
        return
    for key, value in enumerate(table.values):
        if low < 0 and not -size // 2 <= value < size // 2:
            raise ValueOverflowError(key, value, value_qubits)
        if low >= 0 and value >= size:
            raise ValueOverflowError(key, value, value_qubits)

def entangler_program(
    polynomial: BinaryPolynomial,
    layout: RegisterLayout,
    bit_order: BitOrder = BitOrder.MSB0,
) -> CircuitProgram:
    """
    Value-register half of the dictionary: |k>|0> -> |k>|p(k) mod M>.

    Hadamards on the value register, one controlled phase per monomial and
    value qubit, then the inverse QFT on the value register. Key qubits are
    only used as controls, so the key state is whatever was prepared before.
    """
    if polynomial.num_vars != layout.key_qubits:
        raise InputValidationError(
            f"Polynomial has {polynomial.num_vars} variables but the key register has {layout.key_qubits} qubits"
        )
    check_value_range(to_table(polynomial, bit_order), layout.value_qubits)

    size = layout.num_values
    ops = [GateOp.h(q) for q in layout.value_indices]
    for monomial, coefficient in polynomial.terms.items():
        controls = tuple(
            layout.key_indices[variable_key_position(j, layout.key_qubits, bit_order)]
            for j in monomial
        )
        for t, target in enumerate(layout.value_indices):
            turns = (coefficient << t) % size
            if turns:
                ops.append(GateOp.p(2 * math.pi * turns / size, target, controls))
    ops.append(GateOp.iqft(layout.value_indices))

    logger().debug(f"Dictionary for '{polynomial}' uses {len(ops)} gates on {layout.total_qubits} qubits")
    return CircuitProgram(layout.total_qubits, tuple(ops))

def dictionary_program(
    polynomial: BinaryPolynomial,
    layout: RegisterLayout,
    bit_order: BitOrder = BitOrder.MSB0,
) -> CircuitProgram:
    """Prepares (1/sqrt(N)) sum_k |k>_n |p(k) mod M>_m from |0>."""
    keys = CircuitProgram(layout.total_qubits, tuple(GateOp.h(q) for q in layout.key_indices))
    return keys.then(entangler_program(polynomial, layout, bit_order))

def dictionary_outcomes(
    polynomial: BinaryPolynomial,
    layout: RegisterLayout,
    bit_order: BitOrder = BitOrder.MSB0,
    threshold: float = 1e-12,
) -> list[dict]:
    """Measurement outcomes of the dictionary state as rows of key, raw value, signed value and probability."""
    state: StateVector = dictionary_program(polynomial, layout, bit_order).run()
    rows = []
    for basis, probability in enumerate(state.probabilities()):
        if probability <= threshold:
            continue
        key, value = layout.split(basis)
        rows.append({
            "k": key,
            "value": value,
            "signed_value": layout.signed(value),
            "prob": float(probability),
        })
    return sorted(rows, key=lambda row: (row["k"], row["value"]))
