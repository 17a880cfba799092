import math
from typing import Optional
from pyqip.common import BitOrder, EstimateMode
from pyqip.encoding import RegisterLayout, cancel_qft_pairs, entangler_program
from pyqip.errors import InputValidationError
from pyqip.logger import logger
from pyqip.polynomial import BinaryPolynomial
from pyqip.sim import CircuitProgram, GateOp
from pyqip.stateprep import PreparedOperator
from .amplitude_estimator import estimate_magnitude
from .estimate_result import EstimateResult
from .specs import HashSpec, WeightSpec

IMAGINARY_TOLERANCE = 1e-9
DEFAULT_SHOTS = 8192

def simple_program(a_op: PreparedOperator, b_op: PreparedOperator) -> CircuitProgram:
    """B^dagger A; its |0> amplitude is <psi_B|psi_A>."""
    if a_op.qubit_count != b_op.qubit_count:
        raise InputValidationError(
            f"A acts on {a_op.qubit_count} qubits but B acts on {b_op.qubit_count}"
        )
    return a_op.program.then(b_op.program.inverse())

def generalized_program(
    a_op: PreparedOperator,
    entangler: CircuitProgram,
    b_op: PreparedOperator,
    optimize: bool = True,
) -> CircuitProgram:
    """
    (H^n (x) B^dagger) F (A (x) I_m) with keys on qubits 0..n-1 and values on n..n+m-1.

    F is the value-register half of a dictionary, so the key superposition
    comes from A. With `optimize` the IQFT closing F and a QFT opening B^dagger
    are cancelled.
    """
    layout = RegisterLayout(a_op.qubit_count, b_op.qubit_count)
    total = layout.total_qubits
    if entangler.num_qubits != total:
        raise InputValidationError(
            f"F acts on {entangler.num_qubits} qubits, expected n+m = {total}"
        )
    program = (
        a_op.program.embedded(0, total)
        .then(entangler)
        .then(b_op.program.inverse().embedded(layout.value_offset, total))
        .append(*(GateOp.h(q) for q in layout.key_indices))
    )
    return cancel_qft_pairs(program) if optimize else program

def simple_inner_product(a_op: PreparedOperator, b_op: PreparedOperator) -> complex:
    return simple_program(a_op, b_op).run().amplitude(0)

def generalized_inner_product(
    a_op: PreparedOperator,
    entangler: CircuitProgram,
    b_op: PreparedOperator,
    optimize: bool = True,
) -> complex:
    return generalized_program(a_op, entangler, b_op, optimize).run().amplitude(0)

def read_amplitude(
    program: CircuitProgram,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> complex:
    if EstimateMode(mode) == EstimateMode.SAMPLED:
        return complex(estimate_magnitude(program, shots, seed))
    amplitude = program.run().amplitude(0)
    if abs(amplitude.imag) > IMAGINARY_TOLERANCE:
        logger().warning(f"Amplitude of |0> has imaginary part {amplitude.imag:.3e}; using the real part")
    return amplitude

def weighted_sum_simple(
    weights: WeightSpec,
    a_op: Optional[PreparedOperator],
    b_op: PreparedOperator,
    b: Optional[float] = None,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """
    Pattern 1: sum_k w_k f(k) = E / (a b), with E = <0|B^dagger A|0>.

    A defaults to the weight loader. When B carries extra ancilla qubits, A is
    widened with identities on them.
    """
    a_op = a_op or weights.loader()
    if a_op.qubit_count > b_op.qubit_count:
        raise InputValidationError(
            f"A acts on {a_op.qubit_count} qubits, more than the {b_op.qubit_count} of B"
        )
    a_op = a_op.padded(b_op.qubit_count)
    b = b_op.normalization if b is None else b
    a = weights.common_factor

    amplitude = read_amplitude(simple_program(a_op, b_op), mode, shots, seed)
    rescale = 1.0 / (a * b)
    logger().debug(f"Pattern 1 with A={a_op.label}, B={b_op.label}: E={amplitude:.8f}, rescale={rescale:.6f}")
    return EstimateResult(
        amplitude0=amplitude,
        weighted_sum=rescale * amplitude.real,
        a_used=a,
        b_used=b,
        rescale_factor=rescale,
        mode=EstimateMode(mode),
        shots=shots if mode == EstimateMode.SAMPLED else None,
        seed=seed if mode == EstimateMode.SAMPLED else None,
    )

def weighted_hashed_sum(
    weights: WeightSpec,
    hashes: HashSpec,
    polynomial: BinaryPolynomial,
    bit_order: BitOrder = BitOrder.MSB0,
    mode: EstimateMode = EstimateMode.EXACT,
    shots: int = DEFAULT_SHOTS,
    seed: int = 0,
) -> EstimateResult:
    """
    Pattern 2: sum_k w_k h_{f(k) mod M} = (sqrt(N) / (a b)) E, with
    E = <0|(H^n (x) B^dagger) F (A (x) I)|0>.
    """
    layout = RegisterLayout(weights.num_qubits, hashes.num_qubits)
    entangler = entangler_program(polynomial, layout, bit_order)
    a = weights.common_factor
    sampled = EstimateMode(mode) == EstimateMode.SAMPLED

    if hashes.is_zero:
        return EstimateResult(
            amplitude0=0j,
            weighted_sum=0.0,
            a_used=a,
            b_used=0.0,
            rescale_factor=0.0,
            mode=EstimateMode(mode),
            shots=shots if sampled else None,
            seed=seed if sampled else None,
        )

    b_op = hashes.loader()
    b = hashes.common_factor
    program = generalized_program(weights.loader(), entangler, b_op)
    amplitude = read_amplitude(program, mode, shots, seed)
    rescale = math.sqrt(layout.num_keys) / (a * b)
    logger().debug(f"Pattern 2 for '{polynomial}' (n={layout.key_qubits}, m={layout.value_qubits}): E={amplitude:.8f}")
    return EstimateResult(
        amplitude0=amplitude,
        weighted_sum=rescale * amplitude.real,
        a_used=a,
        b_used=b,
        rescale_factor=rescale,
        mode=EstimateMode(mode),
        shots=shots if sampled else None,
        seed=seed if sampled else None,
    )
