from dataclasses import dataclass
from typing import Iterable
from pyqip.common import GateKind
from pyqip.errors import InputValidationError

@dataclass(frozen=True)
class GateOp:
    """
    A single gate of a circuit program.

    For H, X, P and RY `qubits` holds exactly one index, the target. For QFT and
    IQFT it is the ordered register the transform acts on: qubits[i] carries the
    weight 2^i inside the transformed sub-register. `controls` restricts the gate
    to basis states whose control bits are all 1.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    controls: tuple[int, ...] = ()
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        object.__setattr__(self, "theta", float(self.theta))

        if not self.qubits:
            raise InputValidationError(f"{self.kind.value} needs at least one qubit")
        if not self.kind.is_fourier and len(self.qubits) != 1:
            raise InputValidationError(f"{self.kind.value} acts on exactly one qubit, got {self.qubits}")
        if self.kind.is_fourier and self.controls:
            raise InputValidationError("Controlled Fourier transforms are not supported")
        if len(set(self.qubits)) != len(self.qubits):
            raise InputValidationError(f"Repeated qubit in register {self.qubits}")
        if len(set(self.controls)) != len(self.controls):
            raise InputValidationError(f"Repeated control qubit in {self.controls}")
        if set(self.controls) & set(self.qubits):
            raise InputValidationError(f"Controls {self.controls} overlap target {self.qubits}")
        if min(self.qubits + self.controls) < 0:
            raise InputValidationError("Qubit indices must be non-negative")

    @property
    def target(self) -> int:
        return self.qubits[0]

    @property
    def max_index(self) -> int:
        return max(self.qubits + self.controls)

    def validate(self, num_qubits: int) -> None:
        if self.max_index >= num_qubits:
            raise InputValidationError(
                f"{self.kind.value} touches qubit {self.max_index} on a {num_qubits}-qubit register"
            )

    def inverse(self) -> "GateOp":
        if self.kind == GateKind.QFT:
            return GateOp(GateKind.IQFT, self.qubits)
        if self.kind == GateKind.IQFT:
            return GateOp(GateKind.QFT, self.qubits)
        if self.kind.is_parametric:
            return GateOp(self.kind, self.qubits, self.controls, -self.theta)
        return self

    def shifted(self, offset: int) -> "GateOp":
        return GateOp(
            self.kind,
            tuple(q + offset for q in self.qubits),
            tuple(c + offset for c in self.controls),
            self.theta,
        )

    def to_text(self) -> str:
        if self.kind.is_fourier:
            return f"{self.kind.value} {_join(self.qubits)}"
        parts = [self.kind.value, str(self.target)]
        if self.controls:
            parts.append(f"ctrl={_join(self.controls)}")
        if self.kind.is_parametric:
            parts.append(f"theta={self.theta!r}")
        return " ".join(parts)

    @staticmethod
    def from_text(line: str) -> "GateOp":
        tokens = line.split()
        if len(tokens) < 2:
            raise InputValidationError(f"Invalid gate line: '{line}'")
        try:
            kind = GateKind(tokens[0].upper())
        except ValueError:
            raise InputValidationError(f"Unknown gate '{tokens[0]}'")

        controls: tuple[int, ...] = ()
        theta = 0.0
        try:
            qubits = _split(tokens[1])
            for token in tokens[2:]:
                key, _, value = token.partition("=")
                if key == "ctrl":
                    controls = _split(value)
                elif key == "theta":
                    theta = float(value)
                else:
                    raise InputValidationError(f"Unknown gate attribute '{key}' in '{line}'")
        except ValueError as e:
            if isinstance(e, InputValidationError):
                raise
            raise InputValidationError(f"Invalid gate line: '{line}'")
        return GateOp(kind, qubits, controls, theta)

    @staticmethod
    def h(target: int, controls: Iterable[int] = ()) -> "GateOp":
        return GateOp(GateKind.H, (target,), tuple(controls))

    @staticmethod
    def x(target: int, controls: Iterable[int] = ()) -> "GateOp":
        return GateOp(GateKind.X, (target,), tuple(controls))

    @staticmethod
    def p(theta: float, target: int, controls: Iterable[int] = ()) -> "GateOp":
        return GateOp(GateKind.P, (target,), tuple(controls), theta)

    @staticmethod
    def ry(theta: float, target: int, controls: Iterable[int] = ()) -> "GateOp":
        return GateOp(GateKind.RY, (target,), tuple(controls), theta)

    @staticmethod
    def qft(qubits: Iterable[int]) -> "GateOp":
        return GateOp(GateKind.QFT, tuple(qubits))

    @staticmethod
    def iqft(qubits: Iterable[int]) -> "GateOp":
        return GateOp(GateKind.IQFT, tuple(qubits))

def _join(indices: tuple[int, ...]) -> str:
    return ",".join(str(i) for i in indices)

def _split(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part)
