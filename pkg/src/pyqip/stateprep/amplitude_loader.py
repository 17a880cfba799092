import math
import numpy as np
from typing import Optional, Sequence
from pyqip.errors import InputValidationError
from pyqip.sim import CircuitProgram, GateOp
from .prepared_operator import PreparedOperator

def exact_amplitudes(target: Sequence[float], num_qubits: Optional[int] = None, label: str = "exact") -> PreparedOperator:
    """
    Loads target / ||target|| as real amplitudes.

    Builds the rotation tree top-down: for each qubit t, from the most
    significant one, and each assignment h of the qubits above it, an RY
    controlled on h splits the mass of the block between its lower and upper
    halves. On qubit 0 the angle is signed, which realizes negative entries.
    """
    vector = np.asarray(target, dtype=np.float64).reshape(-1)
    size = vector.shape[0]
    if size < 2 or size & (size - 1):
        raise InputValidationError(f"Target length must be a power of two >= 2, got {size}")
    q = size.bit_length() - 1
    if num_qubits is not None and num_qubits != q:
        raise InputValidationError(f"Target of length {size} does not match {num_qubits} qubits")
    if not np.all(np.isfinite(vector)):
        raise InputValidationError("Target contains non-finite entries")
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        raise InputValidationError("Cannot load the zero vector")
    unit = vector / norm

    ops: list[GateOp] = []
    for t in range(q - 1, -1, -1):
        upper_qubits = tuple(range(t + 1, q))
        blocks = unit.reshape(-1, 2, 1 << t)
        for prefix, block in enumerate(blocks):
            if t == 0:
                angle = 2 * math.atan2(block[1, 0], block[0, 0])
            else:
                angle = 2 * math.atan2(np.linalg.norm(block[1]), np.linalg.norm(block[0]))
            if angle == 0.0:
                continue
            ops.extend(pattern_controlled_ry(angle, t, upper_qubits, prefix))
    return PreparedOperator(CircuitProgram(q, tuple(ops)), 1.0 / norm, label)

def pattern_controlled_ry(angle: float, target: int, controls: tuple[int, ...], pattern: int) -> list[GateOp]:
    """RY(angle) on `target` applied only when controls[i] holds bit i of `pattern`."""
    flips = [GateOp.x(q) for i, q in enumerate(controls) if not (pattern >> i) & 1]
    return flips + [GateOp.ry(angle, target, controls)] + flips
