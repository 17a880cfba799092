import math
import numpy as np
from dataclasses import dataclass
from pyqip.errors import InputValidationError
from pyqip.sim import CircuitProgram

@dataclass(frozen=True)
class PreparedOperator:
    """
    A state preparation program together with its normalization.

    `normalization` is the common factor relating the target vector to the
    prepared amplitudes: amplitude_k = normalization * target_k.
    """

    program: CircuitProgram
    normalization: float
    label: str

    def __post_init__(self):
        if not math.isfinite(self.normalization) or self.normalization <= 0:
            raise InputValidationError(f"Normalization must be positive and finite, got {self.normalization}")

    @property
    def qubit_count(self) -> int:
        return self.program.num_qubits

    def amplitudes(self) -> np.ndarray:
        return self.program.run().amplitudes.copy()

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes()) ** 2

    def padded(self, total_qubits: int) -> "PreparedOperator":
        """Same operator acting as identity on extra high qubits."""
        if total_qubits == self.qubit_count:
            return self
        return PreparedOperator(self.program.embedded(0, total_qubits), self.normalization, self.label)
