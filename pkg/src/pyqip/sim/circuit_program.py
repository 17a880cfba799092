from dataclasses import dataclass
from typing import Iterable, Optional
from pyqip.errors import InputValidationError
from .gate_op import GateOp
from .state_vector import StateVector, MAX_QUBITS

@dataclass(frozen=True)
class CircuitProgram:
    """Ordered gate list over a fixed number of qubits. Immutable; composition returns new programs."""

    num_qubits: int
    ops: tuple[GateOp, ...] = ()

    def __post_init__(self):
        if not 1 <= self.num_qubits <= MAX_QUBITS:
            raise InputValidationError(f"Programs need between 1 and {MAX_QUBITS} qubits, got {self.num_qubits}")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            op.validate(self.num_qubits)

    def __len__(self) -> int:
        return len(self.ops)

    def append(self, *ops: GateOp) -> "CircuitProgram":
        return CircuitProgram(self.num_qubits, self.ops + ops)

    def then(self, other: "CircuitProgram") -> "CircuitProgram":
        if other.num_qubits != self.num_qubits:
            raise InputValidationError(
                f"Cannot compose a {self.num_qubits}-qubit program with a {other.num_qubits}-qubit one"
            )
        return CircuitProgram(self.num_qubits, self.ops + other.ops)

    def inverse(self) -> "CircuitProgram":
        return CircuitProgram(self.num_qubits, tuple(op.inverse() for op in reversed(self.ops)))

    def embedded(self, offset: int, total_qubits: int) -> "CircuitProgram":
        """Places this program on qubits offset..offset+num_qubits-1 of a wider register."""
        if offset < 0 or offset + self.num_qubits > total_qubits:
            raise InputValidationError(
                f"Cannot place {self.num_qubits} qubits at offset {offset} of a {total_qubits}-qubit register"
            )
        return CircuitProgram(total_qubits, tuple(op.shifted(offset) for op in self.ops))

    def run(self, initial: Optional[StateVector] = None) -> StateVector:
        state = initial.copy() if initial is not None else StateVector.zero(self.num_qubits)
        return state.apply_program(self)

    def to_text(self) -> str:
        lines = [f"qubits {self.num_qubits}"]
        lines.extend(op.to_text() for op in self.ops)
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "CircuitProgram":
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith("#")]
        if not lines or not lines[0].startswith("qubits "):
            raise InputValidationError("Program text must start with a 'qubits N' line")
        try:
            num_qubits = int(lines[0].split()[1])
        except (IndexError, ValueError):
            raise InputValidationError(f"Invalid header: '{lines[0]}'")
        return CircuitProgram(num_qubits, tuple(GateOp.from_text(line) for line in lines[1:]))

    @staticmethod
    def of(num_qubits: int, ops: Iterable[GateOp]) -> "CircuitProgram":
        return CircuitProgram(num_qubits, tuple(ops))
