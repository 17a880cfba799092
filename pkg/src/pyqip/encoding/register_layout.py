from dataclasses import dataclass
from typing import Optional
from pyqip.errors import InputValidationError

@dataclass(frozen=True)
class RegisterLayout:
    """Key register of n qubits and value register of m qubits on contiguous simulator indices."""

    key_qubits: int
    value_qubits: int
    key_offset: int = 0
    value_offset: Optional[int] = None

    def __post_init__(self):
        if self.key_qubits < 1 or self.value_qubits < 1:
            raise InputValidationError(
                f"Key and value registers need at least one qubit, got n={self.key_qubits}, m={self.value_qubits}"
            )
        if self.value_offset is None:
            object.__setattr__(self, "value_offset", self.key_offset + self.key_qubits)
        if self.key_offset < 0 or self.value_offset < 0:
            raise InputValidationError("Register offsets must be non-negative")
        if set(self.key_indices) & set(self.value_indices):
            raise InputValidationError(f"Key qubits {self.key_indices} overlap value qubits {self.value_indices}")

    @property
    def key_indices(self) -> tuple[int, ...]:
        return tuple(range(self.key_offset, self.key_offset + self.key_qubits))

    @property
    def value_indices(self) -> tuple[int, ...]:
        return tuple(range(self.value_offset, self.value_offset + self.value_qubits))

    @property
    def total_qubits(self) -> int:
        return max(self.key_offset + self.key_qubits, self.value_offset + self.value_qubits)

    @property
    def num_keys(self) -> int:
        return 1 << self.key_qubits

    @property
    def num_values(self) -> int:
        return 1 << self.value_qubits

    def split(self, basis: int) -> tuple[int, int]:
        key = (basis >> self.key_offset) & (self.num_keys - 1)
        value = (basis >> self.value_offset) & (self.num_values - 1)
        return key, value

    def join(self, key: int, value: int) -> int:
        return (key << self.key_offset) | (value << self.value_offset)

    def signed(self, value: int) -> int:
        """Two's-complement reading of a raw value-register index."""
        return value - self.num_values if value >= self.num_values // 2 else value
