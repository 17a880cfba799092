import numpy as np
from typing import Iterable, Optional, TYPE_CHECKING
from pyqip.common import GateKind
from pyqip.errors import CapacityError, InputValidationError
from pyqip.logger import logger
from .gate_op import GateOp

if TYPE_CHECKING:
    from .circuit_program import CircuitProgram

MAX_QUBITS = 24
NORM_TOLERANCE = 1e-10

class StateVector:
    """
    Dense vector of 2^q complex amplitudes.

    Basis index k gives qubit j the bit of weight 2^j, so qubit 0 is the least
    significant one. Gates mutate the vector in place; use `copy()` to branch.
    """

    def __init__(self, amplitudes: np.ndarray):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        size = amplitudes.shape[0]
        if size < 2 or size & (size - 1):
            raise InputValidationError(f"Amplitude count must be a power of two >= 2, got {size}")
        num_qubits = size.bit_length() - 1
        _check_capacity(num_qubits)
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InputValidationError(f"State is not normalized (norm {norm})")

        self._num_qubits = num_qubits
        self._amplitudes = np.ascontiguousarray(amplitudes.copy())

    @staticmethod
    def zero(num_qubits: int) -> "StateVector":
        _check_capacity(num_qubits)
        amplitudes = np.zeros(1 << num_qubits, dtype=np.complex128)
        amplitudes[0] = 1.0
        return StateVector(amplitudes)

    @staticmethod
    def basis(num_qubits: int, index: int) -> "StateVector":
        _check_capacity(num_qubits)
        if not 0 <= index < (1 << num_qubits):
            raise InputValidationError(f"Basis index {index} out of range for {num_qubits} qubits")
        amplitudes = np.zeros(1 << num_qubits, dtype=np.complex128)
        amplitudes[index] = 1.0
        return StateVector(amplitudes)

    @property
    def num_qubits(self) -> int:
        return self._num_qubits

    @property
    def amplitudes(self) -> np.ndarray:
        view = self._amplitudes.view()
        view.flags.writeable = False
        return view

    def copy(self) -> "StateVector":
        return StateVector(self._amplitudes)

    def norm(self) -> float:
        return float(np.linalg.norm(self._amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self._amplitudes) ** 2

    def amplitude(self, basis: int) -> complex:
        if not 0 <= basis < self._amplitudes.shape[0]:
            raise InputValidationError(f"Basis index {basis} out of range for {self._num_qubits} qubits")
        return complex(self._amplitudes[basis])

    def apply(self, op: GateOp) -> "StateVector":
        op.validate(self._num_qubits)
        if op.kind.is_fourier:
            self._fourier(op.qubits, inverse=op.kind == GateKind.IQFT)
        else:
            self._single_qubit(op)
        return self

    def apply_qft(self, qubits: Iterable[int], inverse: bool = False) -> "StateVector":
        qubits = tuple(qubits)
        return self.apply(GateOp.iqft(qubits) if inverse else GateOp.qft(qubits))

    def apply_program(self, program: "CircuitProgram") -> "StateVector":
        if program.num_qubits != self._num_qubits:
            raise InputValidationError(
                f"Program on {program.num_qubits} qubits applied to a {self._num_qubits}-qubit state"
            )
        for op in program.ops:
            self.apply(op)
        return self

    def sample(self, shots: int, seed: int) -> dict[int, int]:
        """Draws `shots` measurements of all qubits; equal seeds give equal histograms."""
        if shots < 1:
            raise InputValidationError(f"shots must be >= 1, got {shots}")
        probabilities = self.probabilities()
        probabilities = probabilities / probabilities.sum()
        counts = np.random.default_rng(seed).multinomial(shots, probabilities)
        histogram = {int(k): int(c) for k, c in enumerate(counts) if c > 0}
        logger().debug(f"Sampled {shots} shots (seed {seed}) into {len(histogram)} outcomes")
        return histogram

    def to_rows(self, threshold: float = 0.0) -> list[dict]:
        rows = []
        for k, amplitude in enumerate(self._amplitudes):
            probability = float(abs(amplitude) ** 2)
            if probability < threshold:
                continue
            rows.append({
                "basis": k,
                "re": float(amplitude.real),
                "im": float(amplitude.imag),
                "prob": probability,
            })
        return rows

    def _tensor(self) -> np.ndarray:
        return self._amplitudes.reshape((2,) * self._num_qubits)

    def _axis(self, qubit: int) -> int:
        return self._num_qubits - 1 - qubit

    def _single_qubit(self, op: GateOp) -> None:
        index = [slice(None)] * self._num_qubits
        for control in op.controls:
            index[self._axis(control)] = slice(1, 2)
        block = np.moveaxis(self._tensor()[tuple(index)], self._axis(op.target), 0)

        if op.kind == GateKind.P:
            block[1] *= np.exp(1j * op.theta)
            return

        low = block[0].copy()
        high = block[1].copy()
        if op.kind == GateKind.X:
            block[0] = high
            block[1] = low
        elif op.kind == GateKind.H:
            block[0] = (low + high) / np.sqrt(2)
            block[1] = (low - high) / np.sqrt(2)
        elif op.kind == GateKind.RY:
            c, s = np.cos(op.theta / 2), np.sin(op.theta / 2)
            block[0] = c * low - s * high
            block[1] = s * low + c * high
        else:
            raise InputValidationError(f"Unsupported gate {op.kind}")

    def _fourier(self, qubits: tuple[int, ...], inverse: bool) -> None:
        # Row-major reshape wants the sub-register's most significant qubit first.
        sub_axes = [self._axis(q) for q in reversed(qubits)]
        rest_axes = [axis for axis in range(self._num_qubits) if axis not in sub_axes]
        permutation = rest_axes + sub_axes
        size = 1 << len(qubits)

        blocks = self._tensor().transpose(permutation).reshape(-1, size)
        if inverse:
            blocks = np.fft.fft(blocks, axis=1, norm="ortho")
        else:
            blocks = np.fft.ifft(blocks, axis=1, norm="ortho")
        restored = blocks.reshape((2,) * self._num_qubits).transpose(np.argsort(permutation))
        self._amplitudes = np.ascontiguousarray(restored).reshape(-1)

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self._num_qubits})"

def _check_capacity(num_qubits: int) -> None:
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise CapacityError(f"Qubit count must be between 1 and {MAX_QUBITS}, got {num_qubits}")

def zero_state(num_qubits: int) -> StateVector:
    return StateVector.zero(num_qubits)

def apply(state: StateVector, op: GateOp) -> StateVector:
    """Returns a new state with `op` applied; `state` is left untouched."""
    return state.copy().apply(op)

def apply_qft(state: StateVector, qubits: Iterable[int], inverse: bool = False) -> StateVector:
    return state.copy().apply_qft(qubits, inverse)

def amplitude_of(state: StateVector, basis: int) -> complex:
    return state.amplitude(basis)

def sample(state: StateVector, shots: int, seed: int) -> dict[int, int]:
    return state.sample(shots, seed)

def execute(program: "CircuitProgram", initial: Optional[StateVector] = None) -> StateVector:
    state = initial.copy() if initial is not None else StateVector.zero(program.num_qubits)
    return state.apply_program(program)
