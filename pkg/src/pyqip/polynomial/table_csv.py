import os
import numpy as np
from pyqip.common import BitOrder
from pyqip.errors import InputValidationError
from .function_table import FunctionTable

def read_value_csv(path: str) -> np.ndarray:
    """Reads a `k,value` CSV (header optional) and returns the values ordered by k."""
    if not os.path.exists(path):
        raise InputValidationError(f"CSV file not found: {path}")
    try:
        data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2, skiprows=_header_rows(path))
    except ValueError as e:
        raise InputValidationError(f"Invalid CSV {path}: {e}")
    if data.shape[1] != 2:
        raise InputValidationError(f"Expected two columns (k,value) in {path}, got {data.shape[1]}")
    keys = data[:, 0].astype(np.int64)
    if sorted(keys.tolist()) != list(range(len(keys))):
        raise InputValidationError(f"Keys in {path} must cover 0..{len(keys) - 1} exactly once")
    values = np.empty(len(keys), dtype=np.float64)
    values[keys] = data[:, 1]
    return values

def read_table_csv(path: str, bit_order: BitOrder = BitOrder.MSB0) -> FunctionTable:
    return FunctionTable.of(tuple(read_value_csv(path)), bit_order)

def write_table_csv(path: str, values) -> None:
    values = np.asarray(values)
    rows = np.column_stack([np.arange(len(values)), values])
    fmt = "%d" if np.issubdtype(values.dtype, np.integer) else "%.17g"
    np.savetxt(path, rows, delimiter=",", header="k,value", comments="", fmt=["%d", fmt])

def _header_rows(path: str) -> int:
    with open(path, "r", encoding="utf-8") as f:
        first = f.readline().strip()
    return 1 if first and not first.lstrip("-").split(",")[0].strip().isdigit() else 0
