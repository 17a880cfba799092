import numpy as np
from dataclasses import dataclass
from typing import Sequence
from pyqip.common import BitOrder
from pyqip.errors import InputValidationError

@dataclass(frozen=True)
class FunctionTable:
    """Integer values f(k) for k = 0..2^n-1, with the bit order that maps k to (k_0, ..., k_{n-1})."""

    num_vars: int
    values: tuple[int, ...]
    bit_order: BitOrder = BitOrder.MSB0

    def __post_init__(self):
        if self.num_vars < 1:
            raise InputValidationError(f"A table needs at least one variable, got {self.num_vars}")
        values = tuple(self.values)
        if len(values) != 1 << self.num_vars:
            raise InputValidationError(f"Expected {1 << self.num_vars} values for n={self.num_vars}, got {len(values)}")
        if any(int(v) != v for v in values):
            raise InputValidationError("Table values must be integers")
        object.__setattr__(self, "values", tuple(int(v) for v in values))
        object.__setattr__(self, "bit_order", BitOrder(self.bit_order))

    @staticmethod
    def of(values: Sequence[int], bit_order: BitOrder = BitOrder.MSB0) -> "FunctionTable":
        size = len(values)
        if size < 2 or size & (size - 1):
            raise InputValidationError(f"Table length must be a power of two >= 2, got {size}")
        return FunctionTable(size.bit_length() - 1, tuple(values), bit_order)

    @property
    def size(self) -> int:
        return len(self.values)

    def bits(self, key: int) -> tuple[int, ...]:
        if not 0 <= key < self.size:
            raise InputValidationError(f"Key {key} out of range for n={self.num_vars}")
        return key_bits(key, self.num_vars, self.bit_order)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def __add__(self, other: "FunctionTable") -> "FunctionTable":
        self._check_compatible(other)
        return FunctionTable(self.num_vars, tuple(a + b for a, b in zip(self.values, other.values)), self.bit_order)

    def scaled(self, factor: int) -> "FunctionTable":
        return FunctionTable(self.num_vars, tuple(int(factor) * v for v in self.values), self.bit_order)

    def _check_compatible(self, other: "FunctionTable") -> None:
        if self.num_vars != other.num_vars or self.bit_order != other.bit_order:
            raise InputValidationError("Tables must share size and bit order")

def key_bits(key: int, num_vars: int, bit_order: BitOrder) -> tuple[int, ...]:
    if bit_order == BitOrder.LSB0:
        return tuple((key >> j) & 1 for j in range(num_vars))
    return tuple((key >> (num_vars - 1 - j)) & 1 for j in range(num_vars))

def variable_key_position(variable: int, num_vars: int, bit_order: BitOrder) -> int:
    """Bit position (weight 2^position) of key k that holds variable x_variable."""
    return variable if bit_order == BitOrder.LSB0 else num_vars - 1 - variable
