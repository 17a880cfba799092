from typing import Callable, Optional
from pyqip.errors import InputValidationError
from pyqip.polynomial import read_value_csv
from .amplitude_loader import exact_amplitudes
from .fourier_loaders import raised_cosine, sin4, sin8
from .linear_loaders import (
    basis_operator,
    discretized_normal,
    identity_ramp,
    linear_trig,
    quantile_state,
    uniform_operator,
)
from .prepared_operator import PreparedOperator

FILE_PREFIX = "file:"

class LoaderFactory:
    """
    Builds prepared operators from their command-line names.

    Parametrized loaders read their parameter from keyword arguments:
    trig (theta), quantile (cutoff), point (value), normal (mean, sigma).
    `file:<path>` loads the values of a k,value CSV with `exact_amplitudes`.
    """

    NAMES = ("rcos", "sin4", "sin8", "ramp", "trig", "quantile", "point", "normal", "uniform")

    def __init__(self):
        self._builders: dict[str, Callable[..., PreparedOperator]] = {
            "rcos": lambda n, **_: raised_cosine(n),
            "sin4": lambda n, **_: sin4(n),
            "sin8": lambda n, **_: sin8(n),
            "ramp": lambda n, **_: identity_ramp(n),
            "uniform": lambda n, **_: uniform_operator(n),
            "trig": lambda n, theta=None, **_: linear_trig(_required(theta, "theta", "trig"), n),
            "quantile": lambda n, cutoff=None, **_: quantile_state(_required(cutoff, "cutoff", "quantile"), n),
            "point": lambda n, value=None, **_: basis_operator(_required(value, "value", "point"), n),
            "normal": lambda n, mean=None, sigma=None, **_: discretized_normal(
                n,
                _required(mean, "mean", "normal"),
                _required(sigma, "sigma", "normal"),
            ),
        }

    def create(self, name: str, num_qubits: int, **params) -> PreparedOperator:
        if name.startswith(FILE_PREFIX):
            values = read_value_csv(name[len(FILE_PREFIX):])
            return exact_amplitudes(values, num_qubits, label=name)
        builder = self._builders.get(name)
        if builder is None:
            raise InputValidationError(
                f"Loader '{name}' not found, expected one of {', '.join(self.NAMES)} or file:<path>"
            )
        return builder(num_qubits, **params)

def _required(value: Optional[float], param: str, loader: str):
    if value is None:
        raise InputValidationError(f"Loader '{loader}' needs the '{param}' parameter")
    return value
