import math
import numpy as np
from pyqip.errors import InputValidationError
from pyqip.sim import CircuitProgram, GateOp
from .amplitude_loader import exact_amplitudes
from .prepared_operator import PreparedOperator

def raised_cosine(num_qubits: int) -> PreparedOperator:
    """
    Two Fourier coefficients, (|0> - |1>)/sqrt(2), followed by the inverse QFT.

    Amplitudes are sqrt(2/N) sin(k pi/N) e^{i(pi/2 - k pi/N)}, so the output
    probabilities are (2/N) sin^2(k pi/N).
    """
    _check_min_qubits(num_qubits, 2, "raised_cosine")
    size = 1 << num_qubits
    program = CircuitProgram(num_qubits, (
        GateOp.h(0),
        GateOp.p(math.pi, 0),
        GateOp.iqft(range(num_qubits)),
    ))
    return PreparedOperator(program, math.sqrt(2 / size), "N1")

def sin4(num_qubits: int) -> PreparedOperator:
    """Real amplitudes sqrt(8/(3N)) sin^2(k pi/N) from three Fourier coefficients."""
    _check_min_qubits(num_qubits, 2, "sin4")
    size = 1 << num_qubits
    coefficients = {0: 2.0, 1: -1.0, size - 1: -1.0}
    return _fourier_loader(coefficients, num_qubits, math.sqrt(8 / (3 * size)), "N2")

def sin8(num_qubits: int) -> PreparedOperator:
    """Real amplitudes sqrt(128/(35N)) sin^4(k pi/N), i.e. probabilities proportional to sin^8."""
    _check_min_qubits(num_qubits, 3, "sin8")
    size = 1 << num_qubits
    coefficients = {0: 6.0, 1: -4.0, size - 1: -4.0, 2: 1.0, size - 2: 1.0}
    return _fourier_loader(coefficients, num_qubits, math.sqrt(128 / (35 * size)), "N4")

def _fourier_loader(coefficients: dict[int, float], num_qubits: int, normalization: float, label: str) -> PreparedOperator:
    # 6 - 8cos(x) + 2cos(2x) = 16 sin^4(x/2) and 2 - 2cos(x) = 4 sin^2(x/2) under the inverse QFT.
    spectrum = np.zeros(1 << num_qubits)
    for index, value in coefficients.items():
        spectrum[index] = value
    loader = exact_amplitudes(spectrum, num_qubits)
    program = loader.program.append(GateOp.iqft(range(num_qubits)))
    return PreparedOperator(program, normalization, label)

def _check_min_qubits(num_qubits: int, minimum: int, name: str) -> None:
    if num_qubits < minimum:
        raise InputValidationError(f"{name} needs at least {minimum} qubits, got {num_qubits}")
