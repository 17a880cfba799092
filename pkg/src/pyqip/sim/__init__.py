from .gate_op import GateOp
from .circuit_program import CircuitProgram
from .state_vector import (
    StateVector,
    MAX_QUBITS,
    zero_state,
    apply,
    apply_qft,
    amplitude_of,
    sample,
    execute,
)

__all__ = [
    "GateOp",
    "CircuitProgram",
    "StateVector",
    "MAX_QUBITS",
    "zero_state",
    "apply",
    "apply_qft",
    "amplitude_of",
    "sample",
    "execute",
]
