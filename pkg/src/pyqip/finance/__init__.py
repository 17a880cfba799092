from .models import PayoffSpec, VarQuery, WoernerEggerParams
from .report import FinanceReport
from .expected_value import resolve_weights, expected_value_discrete, expected_value_oracle
from .payoff import payoff_expectation, payoff_expectation_shifted, payoff_oracle
from .value_at_risk import (
    VarResult,
    cumulative_probability,
    value_at_risk,
    cumulative_oracle,
    value_at_risk_oracle,
)
from .rational import RationalReport, rational_function, rational_values, expected_rational
from .linear import (
    ramp_weighted_sum,
    linear_expected_exact,
    trig_weighted_sum,
    linear_expected_approx,
    linear_oracle,
)
from .counting import CountResult, count_preimages, count_oracle
from .woerner_egger import (
    woerner_egger_circuit,
    woerner_egger_linear_circuit,
    ancilla_probability,
    woerner_egger_expected,
    woerner_egger_linear,
    woerner_egger_rescaled,
    woerner_egger_oracle,
)

__all__ = [
    "PayoffSpec",
    "VarQuery",
    "WoernerEggerParams",
    "FinanceReport",
    "resolve_weights",
    "expected_value_discrete",
    "expected_value_oracle",
    "payoff_expectation",
    "payoff_expectation_shifted",
    "payoff_oracle",
    "VarResult",
    "cumulative_probability",
    "value_at_risk",
    "cumulative_oracle",
    "value_at_risk_oracle",
    "RationalReport",
    "rational_function",
    "rational_values",
    "expected_rational",
    "ramp_weighted_sum",
    "linear_expected_exact",
    "trig_weighted_sum",
    "linear_expected_approx",
    "linear_oracle",
    "CountResult",
    "count_preimages",
    "count_oracle",
    "woerner_egger_circuit",
    "woerner_egger_linear_circuit",
    "ancilla_probability",
    "woerner_egger_expected",
    "woerner_egger_linear",
    "woerner_egger_rescaled",
    "woerner_egger_oracle",
]
