from .register_layout import RegisterLayout
from .phase_encoding import geometric_state_program, encode_integer
from .dictionary_encoder import (
    check_value_range,
    entangler_program,
    dictionary_program,
    dictionary_outcomes,
)
from .program_optimizer import cancel_qft_pairs

__all__ = [
    "RegisterLayout",
    "geometric_state_program",
    "encode_integer",
    "check_value_range",
    "entangler_program",
    "dictionary_program",
    "dictionary_outcomes",
    "cancel_qft_pairs",
]
