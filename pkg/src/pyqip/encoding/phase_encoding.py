import math
from pyqip.errors import EncodingRangeError, InputValidationError
from pyqip.sim import CircuitProgram, GateOp

_TWO_PI = 2 * math.pi

def geometric_state_program(theta: float, num_qubits: int, prepare: bool = True) -> CircuitProgram:
    """
    Program whose output is (1/sqrt(M)) sum_k e^{ik theta} |k>.

    The phase stage puts P(2^j theta) on the qubit of weight 2^j. With
    `prepare=False` the leading Hadamard layer is left out, so the program only
    carries the phases and expects a uniform superposition as input.
    """
    if num_qubits < 1:
        raise InputValidationError(f"num_qubits must be >= 1, got {num_qubits}")
    ops = [GateOp.h(j) for j in range(num_qubits)] if prepare else []
    for j in range(num_qubits):
        angle = math.remainder((1 << j) * theta, _TWO_PI)
        if angle != 0.0:
            ops.append(GateOp.p(angle, j))
    return CircuitProgram(num_qubits, tuple(ops))

def encode_integer(value: int, num_qubits: int) -> CircuitProgram:
    """Maps |0>_m to |value> for value >= 0 and to |value + M> for negative values."""
    size = 1 << num_qubits
    if not -size // 2 <= value < size // 2:
        raise EncodingRangeError(f"{value} does not fit a {num_qubits}-qubit two's-complement register")
    program = geometric_state_program(_TWO_PI * value / size, num_qubits)
    return program.append(GateOp.iqft(range(num_qubits)))
