import numpy as np
from dataclasses import dataclass
from pyqip.common import BitOrder, EstimateMode
from pyqip.encoding import RegisterLayout, entangler_program
from pyqip.errors import EncodingRangeError, InputValidationError, PyqipError
from pyqip.innerprod import DEFAULT_SHOTS, generalized_program, read_amplitude
from pyqip.logger import logger
from pyqip.polynomial import BinaryPolynomial, to_table
from pyqip.stateprep import basis_operator, uniform_operator

COUNT_RESIDUE_TOLERANCE = 1e-6

@dataclass(frozen=True)
class CountResult:
    count: int
    estimate: float
    amplitude0: complex
    mode: EstimateMode

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "estimate": float(self.estimate),
            "amplitude0_re": float(self.amplitude0.real),
            "amplitude0_im": float(self.amplitude0.imag),
            "mode": self.mode.value,
        }

def count_preimages(
    polynomial: BinaryPolynomial,
    value: int,
    key_qubits: int,
    value_qubits: int,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> CountResult:
    """
    Number of keys with f(k) = v0, read as N <0|(H^n (x) B^dagger) F (H^n (x) I)|0>
    with B preparing |v0 mod M>. Negative v0 address their two's-complement index.
    """
    if polynomial.num_vars != key_qubits:
        raise InputValidationError(f"Polynomial has {polynomial.num_vars} variables, expected n={key_qubits}")
    size = 1 << value_qubits
    if not -size // 2 <= value < size:
        raise EncodingRangeError(f"v0={value} cannot be addressed in a {value_qubits}-qubit value register")

    layout = RegisterLayout(key_qubits, value_qubits)
    program = generalized_program(
        uniform_operator(key_qubits),
        entangler_program(polynomial, layout, bit_order),
        basis_operator(value % size, value_qubits),
    )
    amplitude = read_amplitude(program, mode, shots, seed)
    estimate = layout.num_keys * amplitude.real
    count = int(round(estimate))
    if EstimateMode(mode) == EstimateMode.EXACT and abs(estimate - count) >= COUNT_RESIDUE_TOLERANCE:
        raise PyqipError(f"Count estimate {estimate} is not an integer")
    logger().debug(f"{count} preimage(s) of {value} under '{polynomial}'")
    return CountResult(count=count, estimate=estimate, amplitude0=amplitude, mode=EstimateMode(mode))

def count_oracle(polynomial: BinaryPolynomial, value: int, value_qubits: int, bit_order: BitOrder = BitOrder.MSB0) -> int:
    size = 1 << value_qubits
    values = np.mod(np.array(to_table(polynomial, bit_order).values), size)
    return int(np.count_nonzero(values == value % size))
