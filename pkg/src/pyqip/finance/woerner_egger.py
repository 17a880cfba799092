import math
import numpy as np
from typing import Optional
from pyqip.common import WoernerEggerMode
from pyqip.errors import InputValidationError
from pyqip.logger import logger
from pyqip.sim import CircuitProgram, GateOp
from pyqip.stateprep import exact_amplitudes, pattern_controlled_ry
from .models import WoernerEggerParams

def woerner_egger_circuit(params: WoernerEggerParams) -> CircuitProgram:
    """
    Loads sqrt(p_k) on the key register and rotates the ancilla (qubit n) by
    RY(2 theta_k) for each key, theta_k = c f(k) + pi/4. The ancilla then reads
    |1> with probability sum_k p_k sin^2(theta_k).
    """
    n = params.num_qubits
    keys = tuple(range(n))
    loader = exact_amplitudes(np.sqrt(params.probabilities), n, label="sqrt(p)")
    ops = list(loader.program.embedded(0, n + 1).ops)
    for k, value in enumerate(params.function_values):
        if params.probabilities[k] == 0.0:
            continue
        ops.extend(pattern_controlled_ry(2 * (params.scale * value + math.pi / 4), n, keys, k))
    return CircuitProgram(n + 1, tuple(ops))

def woerner_egger_linear_circuit(params: WoernerEggerParams) -> CircuitProgram:
    """
    Circuit for f(k) = -1 + 2k/(N-1): theta_k = (pi/4 - c) + k * 2c/(N-1) is
    affine in k, so one uncontrolled RY and one RY per key qubit suffice.
    """
    n = params.num_qubits
    size = 1 << n
    loader = exact_amplitudes(np.sqrt(params.probabilities), n, label="sqrt(p)")
    slope = 2 * params.scale / (size - 1)
    ops = list(loader.program.embedded(0, n + 1).ops)
    ops.append(GateOp.ry(2 * (math.pi / 4 - params.scale), n))
    for j in range(n):
        ops.append(GateOp.ry(2 * slope * (1 << j), n, (j,)))
    return CircuitProgram(n + 1, tuple(ops))

def ancilla_probability(
    params: WoernerEggerParams,
    mode: WoernerEggerMode = WoernerEggerMode.CLASSICAL,
    linear_circuit: bool = False,
    shots: Optional[int] = None,
    seed: int = 0,
) -> float:
    """P1 = sum_k p_k sin^2(c f(k) + pi/4), directly or from the ancilla of the circuit."""
    if WoernerEggerMode(mode) == WoernerEggerMode.CLASSICAL:
        angles = params.scale * params.function_values + math.pi / 4
        return float(np.dot(params.probabilities, np.sin(angles) ** 2))

    program = woerner_egger_linear_circuit(params) if linear_circuit else woerner_egger_circuit(params)
    state = program.run()
    size = 1 << params.num_qubits
    if shots is None:
        return float(np.sum(state.probabilities()[size:]))
    histogram = state.sample(shots, seed)
    return sum(count for basis, count in histogram.items() if basis >= size) / shots

def woerner_egger_expected(
    params: WoernerEggerParams,
    mode: WoernerEggerMode = WoernerEggerMode.CLASSICAL,
    shots: Optional[int] = None,
    seed: int = 0,
) -> float:
    """sum_k p_k f(k) ~ (2 P1 - 1) / (2c), with an O(c^2) bias."""
    p1 = ancilla_probability(params, mode, shots=shots, seed=seed)
    logger().debug(f"Woerner-Egger P1={p1:.12f} ({WoernerEggerMode(mode).value}, c={params.scale})")
    return (2 * p1 - 1) / (2 * params.scale)

def woerner_egger_linear(
    params: WoernerEggerParams,
    num_qubits: Optional[int] = None,
    bounds: Optional[tuple[float, float]] = None,
    mode: WoernerEggerMode = WoernerEggerMode.QUANTUM,
    shots: Optional[int] = None,
    seed: int = 0,
) -> float:
    """
    sum_k p_k k ~ (N-1)/(2c) (P1 - 1/2 + c), or with bounds (lo, hi) the min-max
    form lo + (hi - lo)/(2c) (P1 - 1/2 + c).
    """
    if num_qubits is not None and num_qubits != params.num_qubits:
        raise InputValidationError(f"Probabilities cover {params.num_qubits} qubits, expected {num_qubits}")
    if params.values is not None:
        canonical = WoernerEggerParams(params.scale, params.probabilities).function_values
        if not np.allclose(params.values, canonical, atol=1e-12):
            raise InputValidationError("The linear form needs f(k) = -1 + 2k/(N-1)")
    size = 1 << params.num_qubits
    p1 = ancilla_probability(params, mode, linear_circuit=True, shots=shots, seed=seed)
    low, high = (0.0, float(size - 1)) if bounds is None else bounds
    if bounds is not None and not low < high:
        raise InputValidationError(f"Bounds must satisfy lo < hi, got {bounds}")
    return low + (high - low) / (2 * params.scale) * (p1 - 0.5 + params.scale)

def woerner_egger_rescaled(
    scale: float,
    probabilities,
    values,
    mode: WoernerEggerMode = WoernerEggerMode.CLASSICAL,
    shots: Optional[int] = None,
    seed: int = 0,
) -> float:
    """
    sum_k p_k v_k for arbitrary values: v is mapped onto [-1, 1] by its min and
    max, estimated, and mapped back.
    """
    values = np.asarray(values, dtype=np.float64)
    low, high = float(values.min()), float(values.max())
    if high == low:
        return low
    mapped = -1.0 + 2.0 * (values - low) / (high - low)
    params = WoernerEggerParams(scale, tuple(probabilities), tuple(mapped))
    estimate = woerner_egger_expected(params, mode, shots, seed)
    return low + (high - low) * (estimate + 1.0) / 2.0

def woerner_egger_oracle(params: WoernerEggerParams) -> float:
    return float(np.dot(params.probabilities, params.function_values))
