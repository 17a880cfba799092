import math
import numpy as np
from dataclasses import dataclass, field
from typing import Optional, Sequence
from pyqip.errors import InputValidationError
from pyqip.polynomial import read_value_csv
from pyqip.stateprep import (
    PreparedOperator,
    basis_operator,
    exact_amplitudes,
    identity_ramp,
    sin4,
    sin8,
    uniform_operator,
)

_UNIT_NORM_TOLERANCE = 1e-9

@dataclass(frozen=True)
class WeightSpec:
    """
    The weights w_k of a weighted sum and the common factor a for which a*w_k
    are the amplitudes prepared by the weight loader A.
    """

    num_qubits: int
    weights: tuple[float, ...]
    common_factor: float
    operator: Optional[PreparedOperator] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        _check_vector(self.weights, self.num_qubits, self.common_factor, "weights")

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.weights)

    @property
    def size(self) -> int:
        return len(self.weights)

    def total(self) -> float:
        return float(np.sum(self.vector))

    def loader(self) -> PreparedOperator:
        if self.operator is not None:
            return self.operator
        return exact_amplitudes(self.vector, self.num_qubits, label="w")

    def scaled(self, factor: float) -> "WeightSpec":
        """Weights factor*w_k; the common factor absorbs 1/factor so the loader is unchanged."""
        if not factor > 0:
            raise InputValidationError(f"Scale factor must be positive, got {factor}")
        return WeightSpec(
            self.num_qubits,
            tuple(factor * w for w in self.weights),
            self.common_factor / factor,
            self.operator,
        )

    def normalized(self) -> "WeightSpec":
        """Weights rescaled to sum to 1."""
        return self.scaled(1.0 / self.total())

    def restricted(self, keys: Sequence[int]) -> "WeightSpec":
        """Weights with every key outside `keys` set to zero."""
        kept = np.zeros(self.size)
        index = np.array(sorted(set(keys)), dtype=np.int64)
        if index.size and (index[0] < 0 or index[-1] >= self.size):
            raise InputValidationError(f"Keys must lie in 0..{self.size - 1}")
        kept[index] = self.vector[index]
        return WeightSpec.from_values(kept)

    @staticmethod
    def uniform(num_qubits: int) -> "WeightSpec":
        operator = uniform_operator(num_qubits)
        return WeightSpec(num_qubits, (1.0,) * (1 << num_qubits), operator.normalization, operator)

    @staticmethod
    def sine_squared(num_qubits: int) -> "WeightSpec":
        """w_k = sin^2(k pi/N), loaded by the three-coefficient Fourier loader."""
        operator = sin4(num_qubits)
        return WeightSpec(num_qubits, tuple(_sine_power(num_qubits, 2)), operator.normalization, operator)

    @staticmethod
    def raised_cosine_profile(num_qubits: int) -> "WeightSpec":
        """
        w_k = sin(k pi/N), the magnitude profile of the raised cosine loader.

        The Fourier loader itself carries a k-dependent phase, so these weights
        are loaded as real amplitudes instead.
        """
        if num_qubits < 2:
            raise InputValidationError(f"rcos needs at least 2 qubits, got {num_qubits}")
        weights = _sine_power(num_qubits, 1)
        operator = exact_amplitudes(weights, num_qubits, label="N1")
        return WeightSpec(num_qubits, tuple(weights), math.sqrt(2 / (1 << num_qubits)), operator)

    @staticmethod
    def sine_fourth(num_qubits: int) -> "WeightSpec":
        """w_k = sin^4(k pi/N), loaded by the five-coefficient Fourier loader."""
        operator = sin8(num_qubits)
        return WeightSpec(num_qubits, tuple(_sine_power(num_qubits, 4)), operator.normalization, operator)

    @staticmethod
    def from_values(values: Sequence[float]) -> "WeightSpec":
        vector = np.asarray(values, dtype=np.float64)
        operator = exact_amplitudes(vector, label="w")
        num_qubits = vector.shape[0].bit_length() - 1
        return WeightSpec(num_qubits, tuple(vector), operator.normalization, operator)

    @staticmethod
    def from_file(path: str) -> "WeightSpec":
        return WeightSpec.from_values(read_value_csv(path))

    @staticmethod
    def named(name: str, num_qubits: int) -> "WeightSpec":
        """Weight spec for a loader name: uniform, sin4, rcos, sin8 or file:<path>."""
        if name.startswith("file:"):
            spec = WeightSpec.from_file(name[len("file:"):])
            if spec.num_qubits != num_qubits:
                raise InputValidationError(f"{name} holds {spec.size} weights, expected {1 << num_qubits}")
            return spec
        constructors = {
            "uniform": WeightSpec.uniform,
            "sin4": WeightSpec.sine_squared,
            "rcos": WeightSpec.raised_cosine_profile,
            "sin8": WeightSpec.sine_fourth,
        }
        if name not in constructors:
            raise InputValidationError(f"Unknown weights '{name}', expected one of {', '.join(constructors)} or file:<path>")
        return constructors[name](num_qubits)

@dataclass(frozen=True)
class HashSpec:
    """
    The hashes h_v over raw value-register indices v = 0..M-1 and the common
    factor b for which b*h_v are the amplitudes prepared by B. An all-zero hash
    has no loader.
    """

    num_qubits: int
    hashes: tuple[float, ...]
    common_factor: float
    operator: Optional[PreparedOperator] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "hashes", tuple(float(h) for h in self.hashes))
        if self.is_zero:
            _check_length(self.hashes, self.num_qubits, "hashes")
        else:
            _check_vector(self.hashes, self.num_qubits, self.common_factor, "hashes")

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.hashes)

    @property
    def is_zero(self) -> bool:
        return not any(self.hashes)

    def loader(self) -> PreparedOperator:
        if self.is_zero:
            raise InputValidationError("An all-zero hash cannot be loaded as a state")
        if self.operator is not None:
            return self.operator
        return exact_amplitudes(self.vector, self.num_qubits, label="h")

    @staticmethod
    def identity(num_qubits: int) -> "HashSpec":
        operator = identity_ramp(num_qubits)
        hashes = tuple(float(v) for v in range(1 << num_qubits))
        return HashSpec(num_qubits, hashes, operator.normalization, operator)

    @staticmethod
    def point(num_qubits: int, value: int) -> "HashSpec":
        """Indicator of the raw register value `value`."""
        operator = basis_operator(value, num_qubits)
        hashes = tuple(1.0 if v == value else 0.0 for v in range(1 << num_qubits))
        return HashSpec(num_qubits, hashes, 1.0, operator)

    @staticmethod
    def call_payoff(num_qubits: int, strike: int) -> "HashSpec":
        """h_v = v - K for v >= K, else 0."""
        return HashSpec.from_values([max(v - strike, 0) for v in range(1 << num_qubits)])

    @staticmethod
    def rectified_identity(num_qubits: int) -> "HashSpec":
        """h_v = v on the non-negative half of the two's-complement window, 0 on the negative half."""
        size = 1 << num_qubits
        return HashSpec.from_values([v if v < size // 2 else 0 for v in range(size)])

    @staticmethod
    def selected_identity(num_qubits: int, values: Sequence[int]) -> "HashSpec":
        """h_v = v for v in `values`, else 0."""
        selected = set(values)
        return HashSpec.from_values([v if v in selected else 0 for v in range(1 << num_qubits)])

    @staticmethod
    def from_values(values: Sequence[float]) -> "HashSpec":
        vector = np.asarray(values, dtype=np.float64)
        size = vector.shape[0]
        if size < 2 or size & (size - 1):
            raise InputValidationError(f"Hash length must be a power of two >= 2, got {size}")
        num_qubits = size.bit_length() - 1
        if not np.any(vector):
            return HashSpec(num_qubits, tuple(vector), 1.0)
        operator = exact_amplitudes(vector, num_qubits, label="h")
        return HashSpec(num_qubits, tuple(vector), operator.normalization, operator)

def _sine_power(num_qubits: int, power: int) -> np.ndarray:
    size = 1 << num_qubits
    return np.sin(np.arange(size) * np.pi / size) ** power

def _check_length(values: tuple[float, ...], num_qubits: int, name: str) -> None:
    if len(values) != 1 << num_qubits:
        raise InputValidationError(f"Expected {1 << num_qubits} {name} for {num_qubits} qubits, got {len(values)}")

def _check_vector(values: tuple[float, ...], num_qubits: int, common_factor: float, name: str) -> None:
    _check_length(values, num_qubits, name)
    if not math.isfinite(common_factor) or common_factor <= 0:
        raise InputValidationError(f"Common factor of {name} must be positive, got {common_factor}")
    norm = common_factor * float(np.linalg.norm(values))
    if abs(norm - 1.0) > _UNIT_NORM_TOLERANCE:
        raise InputValidationError(f"Scaled {name} have norm {norm}, expected 1")
