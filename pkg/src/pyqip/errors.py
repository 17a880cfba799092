from typing import Optional

class PyqipError(Exception):
    """Base class for every error raised by pyqip."""

    exit_code: int = 1

    def to_record(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": str(self),
            "exit_code": self.exit_code,
        }

class InputValidationError(PyqipError, ValueError):
    """Invalid indices, arities, parameters or mismatched registers."""

    exit_code = 2

class CapacityError(InputValidationError):
    """A qubit count outside the range the simulator supports."""

class EncodingRangeError(InputValidationError):
    """An integer that does not fit the register it should be encoded in."""

class ValueOverflowError(PyqipError):
    """A function value that does not fit the value register of a dictionary."""

    exit_code = 3

    def __init__(self, key: int, value: int, value_qubits: int):
        self.key = key
        self.value = value
        self.value_qubits = value_qubits
        register_size = 1 << value_qubits
        super().__init__(
            f"Value {value} at key {key} does not fit a {value_qubits}-qubit value register "
            f"(allowed: [{-register_size // 2}, {register_size // 2}) or [0, {register_size}))"
        )

class UnreachableConfidenceError(PyqipError):
    """The requested confidence level is above the total probability mass."""

    exit_code = 4

    def __init__(self, alpha: float, total_mass: float, message: Optional[str] = None):
        self.alpha = alpha
        self.total_mass = total_mass
        super().__init__(message or f"Confidence level {alpha} is unreachable, total mass is {total_mass}")
