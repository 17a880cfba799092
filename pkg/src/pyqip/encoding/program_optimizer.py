from pyqip.common import GateKind
from pyqip.logger import logger
from pyqip.sim import CircuitProgram, GateOp

def cancel_qft_pairs(program: CircuitProgram) -> CircuitProgram:
    """Drops adjacent QFT/IQFT pairs acting on the same ordered register."""
    kept: list[GateOp] = []
    for op in program.ops:
        if kept and _cancels(kept[-1], op):
            kept.pop()
            continue
        kept.append(op)

    removed = len(program.ops) - len(kept)
    if removed:
        logger().debug(f"Removed {removed // 2} QFT pair(s)")
    return CircuitProgram(program.num_qubits, tuple(kept))

def _cancels(first: GateOp, second: GateOp) -> bool:
    kinds = {first.kind, second.kind}
    return kinds == {GateKind.QFT, GateKind.IQFT} and first.qubits == second.qubits
