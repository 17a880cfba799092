from .binary_polynomial import BinaryPolynomial, Monomial
from .function_table import FunctionTable, key_bits, variable_key_position
from .table_conversion import (
    indicator_polynomial,
    from_table,
    from_table_by_indicators,
    to_table,
)
from .polynomial_parser import parse_polynomial
from .table_csv import read_value_csv, read_table_csv, write_table_csv

__all__ = [
    "BinaryPolynomial",
    "Monomial",
    "FunctionTable",
    "key_bits",
    "variable_key_position",
    "indicator_polynomial",
    "from_table",
    "from_table_by_indicators",
    "to_table",
    "parse_polynomial",
    "read_value_csv",
    "read_table_csv",
    "write_table_csv",
]
