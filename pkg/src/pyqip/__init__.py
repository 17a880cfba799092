__version__ = "0.1.0"

from .errors import (
    PyqipError,
    InputValidationError,
    CapacityError,
    EncodingRangeError,
    ValueOverflowError,
    UnreachableConfidenceError,
)
from .common import BitOrder, EstimateMode, WoernerEggerMode, Command, GateKind
from .sim import GateOp, CircuitProgram, StateVector, zero_state, apply, apply_qft, amplitude_of, sample, execute
from .polynomial import BinaryPolynomial, FunctionTable, parse_polynomial, from_table, to_table
from .encoding import RegisterLayout, encode_integer, entangler_program, dictionary_program, cancel_qft_pairs
from .stateprep import PreparedOperator, LoaderFactory, exact_amplitudes, raised_cosine, sin4, sin8, identity_ramp, linear_trig
from .innerprod import (
    WeightSpec,
    HashSpec,
    EstimateResult,
    simple_inner_product,
    generalized_inner_product,
    weighted_sum_simple,
    weighted_hashed_sum,
)

__all__ = [
    "__version__",
    "PyqipError",
    "InputValidationError",
    "CapacityError",
    "EncodingRangeError",
    "ValueOverflowError",
    "UnreachableConfidenceError",
    "BitOrder",
    "EstimateMode",
    "WoernerEggerMode",
    "Command",
    "GateKind",
    "GateOp",
    "CircuitProgram",
    "StateVector",
    "zero_state",
    "apply",
    "apply_qft",
    "amplitude_of",
    "sample",
    "execute",
    "BinaryPolynomial",
    "FunctionTable",
    "parse_polynomial",
    "from_table",
    "to_table",
    "RegisterLayout",
    "encode_integer",
    "entangler_program",
    "dictionary_program",
    "cancel_qft_pairs",
    "PreparedOperator",
    "LoaderFactory",
    "exact_amplitudes",
    "raised_cosine",
    "sin4",
    "sin8",
    "identity_ramp",
    "linear_trig",
    "WeightSpec",
    "HashSpec",
    "EstimateResult",
    "simple_inner_product",
    "generalized_inner_product",
    "weighted_sum_simple",
    "weighted_hashed_sum",
]
