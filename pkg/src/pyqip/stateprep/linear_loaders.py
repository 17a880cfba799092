import math
import numpy as np
from pyqip.errors import EncodingRangeError, InputValidationError
from pyqip.encoding import encode_integer
from pyqip.sim import CircuitProgram, GateOp
from .amplitude_loader import exact_amplitudes
from .prepared_operator import PreparedOperator

def uniform_operator(num_qubits: int) -> PreparedOperator:
    if num_qubits < 1:
        raise InputValidationError(f"num_qubits must be >= 1, got {num_qubits}")
    program = CircuitProgram(num_qubits, tuple(GateOp.h(q) for q in range(num_qubits)))
    return PreparedOperator(program, 1 / math.sqrt(1 << num_qubits), "H")

def identity_ramp(num_qubits: int) -> PreparedOperator:
    """L_q: amplitudes proportional to k, with b = sqrt(6/((M-1)M(2M-1)))."""
    if num_qubits < 1:
        raise InputValidationError(f"num_qubits must be >= 1, got {num_qubits}")
    size = 1 << num_qubits
    loader = exact_amplitudes(np.arange(size, dtype=np.float64), num_qubits)
    normalization = math.sqrt(6 / ((size - 1) * size * (2 * size - 1)))
    return PreparedOperator(loader.program, normalization, "L")

def linear_trig(theta: float, num_qubits: int) -> PreparedOperator:
    """
    T_theta on n key qubits plus one ancilla (qubit n):

        (1/sqrt(N)) sum_k sin(k theta)|k>|0> + (1/sqrt(N)) sum_k cos(k theta)|k>|1>

    The ancilla starts in |1>; key qubit j adds RY(-2^{j+1} theta), so the
    accumulated rotation for key k is RY(-2k theta). Normalization is
    theta/sqrt(N), the small-angle factor relating sin(k theta) to k.
    """
    if num_qubits < 1:
        raise InputValidationError(f"num_qubits must be >= 1, got {num_qubits}")
    if not theta > 0:
        raise InputValidationError(f"theta must be positive, got {theta}")
    ancilla = num_qubits
    ops = [GateOp.h(q) for q in range(num_qubits)]
    ops.append(GateOp.x(ancilla))
    for j in range(num_qubits):
        ops.append(GateOp.ry(-2 * (1 << j) * theta, ancilla, (j,)))
    size = 1 << num_qubits
    return PreparedOperator(CircuitProgram(num_qubits + 1, tuple(ops)), theta / math.sqrt(size), f"T({theta!r})")

def quantile_state(cutoff: int, num_qubits: int) -> PreparedOperator:
    """Uniform amplitudes 1/sqrt(l+1) on k = 0..l."""
    size = 1 << num_qubits
    if not 0 <= cutoff < size:
        raise EncodingRangeError(f"Cutoff {cutoff} out of range 0..{size - 1}")
    target = np.zeros(size)
    target[: cutoff + 1] = 1.0
    loader = exact_amplitudes(target, num_qubits)
    return PreparedOperator(loader.program, 1 / math.sqrt(cutoff + 1), f"Q({cutoff})")

def basis_operator(value: int, num_qubits: int) -> PreparedOperator:
    """Prepares |value>_m through the two's-complement integer encoding."""
    size = 1 << num_qubits
    if not 0 <= value < size:
        raise EncodingRangeError(f"Basis value {value} out of range 0..{size - 1}")
    signed = value - size if value >= size // 2 else value
    return PreparedOperator(encode_integer(signed, num_qubits), 1.0, f"|{value}>")

def discretized_normal(num_qubits: int, mean: float, sigma: float) -> PreparedOperator:
    """Amplitudes sqrt(pdf(k)) of a Gaussian sampled at k = 0..N-1 and renormalized."""
    if sigma <= 0:
        raise InputValidationError(f"sigma must be positive, got {sigma}")
    keys = np.arange(1 << num_qubits, dtype=np.float64)
    density = np.exp(-0.5 * ((keys - mean) / sigma) ** 2)
    loader = exact_amplitudes(np.sqrt(density), num_qubits)
    return PreparedOperator(loader.program, loader.normalization, f"normal({mean!r},{sigma!r})")
