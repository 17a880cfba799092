import math
import numpy as np
import pytest
from numpy.testing import assert_allclose
from pyqip.common import EstimateMode, WoernerEggerMode
from pyqip.errors import EncodingRangeError, InputValidationError, UnreachableConfidenceError, ValueOverflowError
from pyqip.finance import (
    FinanceReport,
    PayoffSpec,
    VarQuery,
    WoernerEggerParams,
    ancilla_probability,
    count_oracle,
    count_preimages,
    cumulative_oracle,
    cumulative_probability,
    expected_rational,
    expected_value_discrete,
    expected_value_oracle,
    linear_expected_approx,
    linear_expected_exact,
    linear_oracle,
    payoff_expectation,
    payoff_expectation_shifted,
    payoff_oracle,
    ramp_weighted_sum,
    rational_values,
    trig_weighted_sum,
    value_at_risk,
    value_at_risk_oracle,
    woerner_egger_expected,
    woerner_egger_linear,
    woerner_egger_oracle,
    woerner_egger_rescaled,
)
from pyqip.innerprod import WeightSpec
from pyqip.polynomial import parse_polynomial

PRICE = parse_polynomial("7 + 4*k1 - 5*k0*k1 - 2*k0*k2", 3)
COUNTING = parse_polynomial("2*k1 - k0*k1 - 3*k0*k2", 3)

def _sine_distribution() -> WeightSpec:
    return WeightSpec.sine_squared(3).normalized()

def test_expected_value_of_price_polynomial():
    result = expected_value_discrete(PRICE, 3, 4)
    assert_allclose(result.weighted_sum, 30.76777, atol=1e-3)
    assert_allclose(result.weighted_sum, expected_value_oracle(PRICE, 4), atol=1e-9)

def test_expected_value_with_uniform_weights():
    assert_allclose(expected_value_discrete(PRICE, 3, 4, weights="uniform").weighted_sum, 58.0, atol=1e-9)

def test_expected_value_checks_variable_count():
    with pytest.raises(InputValidationError):
        expected_value_discrete(PRICE, 4, 4)

def test_payoff_above_strike():
    spec = PayoffSpec(7, PRICE, WeightSpec.sine_squared(3))
    expected = 4 * (0.5 + math.sin(3 * math.pi / 8) ** 2)
    assert_allclose(payoff_oracle(spec), expected, atol=1e-12)
    assert_allclose(payoff_expectation(spec, 3, 4).weighted_sum, expected, atol=1e-9)
    assert_allclose(payoff_expectation_shifted(spec, 3, 4).weighted_sum, expected, atol=1e-9)

def test_payoff_rejects_values_it_cannot_read():
    with pytest.raises(EncodingRangeError):
        payoff_expectation(PayoffSpec(0, parse_polynomial("k0 - 1", 1), WeightSpec.uniform(1)), 1, 2)
    with pytest.raises(EncodingRangeError):
        payoff_expectation(PayoffSpec(16, PRICE, WeightSpec.sine_squared(3)), 3, 4)
    with pytest.raises(ValueOverflowError):
        payoff_expectation_shifted(PayoffSpec(0, PRICE, WeightSpec.sine_squared(3)), 3, 4)

def test_cumulative_probability_of_sine_distribution():
    weights = _sine_distribution()
    assert_allclose(cumulative_probability(weights, 3).weighted_sum, 0.375, atol=1e-9)
    for cutoff in range(8):
        assert_allclose(cumulative_probability(weights, cutoff).weighted_sum, cumulative_oracle(weights, cutoff), atol=1e-9)

@pytest.mark.parametrize("alpha, cutoff", [(0.375, 3), (0.5, 4), (0.99, 7), (0.01, 1)])
def test_value_at_risk_finds_the_smallest_cutoff(alpha, cutoff):
    result = value_at_risk(VarQuery(_sine_distribution(), alpha), 3)
    assert result.cutoff == cutoff
    assert result.cutoff == value_at_risk_oracle(_sine_distribution(), alpha)
    assert result.queries <= 4

def test_value_at_risk_reports_unreachable_confidence():
    weights = WeightSpec.from_values([0.25, 0.25, 0.0, 0.0])
    with pytest.raises(UnreachableConfidenceError) as error:
        value_at_risk(VarQuery(weights, 0.9))
    assert error.value.exit_code == 4
    assert_allclose(error.value.total_mass, 0.5, atol=1e-9)

def test_var_query_validation():
    with pytest.raises(InputValidationError):
        VarQuery(_sine_distribution(), 1.0)
    with pytest.raises(InputValidationError):
        VarQuery(WeightSpec.from_values([0.5, -0.5]), 0.5)

def test_rational_expectation():
    report = expected_rational()
    assert rational_values().shape == (16,)
    assert_allclose(report.quantum, report.classical, atol=1e-8)
    assert_allclose(report.classical, 1.33431, atol=2e-2)
    assert_allclose(report.quantum, 1.34845, atol=3e-2)
    assert_allclose(report.classical_raw, report.classical * report.function_norm)
    assert_allclose(report.estimate.rescale_factor, math.sqrt(3 * 16 / 8))

def test_rational_instance_is_fixed_to_four_qubits():
    with pytest.raises(InputValidationError):
        expected_rational(num_qubits=3)

def test_linear_exact():
    moment = ramp_weighted_sum("sin4", 3).weighted_sum
    assert_allclose(moment, 16.0, atol=1e-6)
    assert_allclose(moment, 15.98493, atol=2e-2)
    assert_allclose(linear_expected_exact(1.0, 2.0, 3), 36.0, atol=1e-4)
    assert_allclose(linear_oracle(1.0, 2.0, WeightSpec.sine_squared(3)), 36.0, atol=1e-12)

def test_linear_approximation_with_small_angles():
    result = trig_weighted_sum(0.1, 3)
    assert_allclose(result.amplitude0.real, 0.02041, atol=1e-4)
    assert_allclose(result.weighted_sum, 15.99768, atol=1e-2)
    assert_allclose(linear_expected_approx(0.1, 3, intercept=1.0, slope=2.0), 35.99536, atol=2e-2)

def test_linear_approximation_bias_shrinks_quadratically():
    errors = [abs(trig_weighted_sum(c, 3).weighted_sum - 16.0) for c in (0.2, 0.1, 0.05)]
    assert errors[0] / errors[1] >= 3.5
    assert errors[1] / errors[2] >= 3.5

def test_linear_approximation_rejects_large_scales():
    with pytest.raises(InputValidationError):
        trig_weighted_sum(0.6, 3)

@pytest.mark.parametrize("value, count", [(0, 3), (-3, 1), (2, 2), (1, 1), (-2, 1), (3, 0)])
def test_count_preimages(value, count):
    result = count_preimages(COUNTING, value, 3, 3)
    assert result.count == count
    assert count_oracle(COUNTING, value, 3) == count

def test_count_amplitude():
    assert_allclose(count_preimages(COUNTING, 0, 3, 3).amplitude0.real, 0.375, atol=1e-9)

def test_count_in_sampled_mode():
    result = count_preimages(COUNTING, 0, 3, 3, mode=EstimateMode.SAMPLED, shots=100_000, seed=1)
    assert result.count == 3
    assert result.mode == EstimateMode.SAMPLED

@pytest.mark.parametrize("value", [-5, 8])
def test_count_rejects_values_outside_the_register(value):
    with pytest.raises(EncodingRangeError):
        count_preimages(COUNTING, value, 3, 3)

def test_woerner_egger_bias_is_quadratic():
    values = tuple(k / 7 for k in range(8))
    errors = []
    for scale in (0.2, 0.1, 0.05):
        params = WoernerEggerParams(scale, (1 / 8,) * 8, values)
        errors.append(abs(woerner_egger_expected(params) - woerner_egger_oracle(params)))
    assert errors[0] / errors[1] >= 3.5
    assert errors[1] / errors[2] >= 3.5

def test_woerner_egger_circuit_matches_the_formula():
    params = WoernerEggerParams(0.1, tuple(_sine_distribution().vector), tuple(k / 7 for k in range(8)))
    assert_allclose(
        ancilla_probability(params, WoernerEggerMode.QUANTUM),
        ancilla_probability(params, WoernerEggerMode.CLASSICAL),
        atol=1e-12,
    )
    linear = WoernerEggerParams(0.1, tuple(_sine_distribution().vector))
    assert_allclose(
        ancilla_probability(linear, WoernerEggerMode.QUANTUM, linear_circuit=True),
        ancilla_probability(linear, WoernerEggerMode.CLASSICAL),
        atol=1e-12,
    )

def test_woerner_egger_linear_mean():
    params = WoernerEggerParams(0.05, tuple(_sine_distribution().vector))
    assert_allclose(woerner_egger_linear(params, 3), 4.0, atol=1e-2)
    assert_allclose(woerner_egger_linear(params, 3, bounds=(10.0, 17.0)), 14.0, atol=1e-2)

def test_woerner_egger_sampled_ancilla_is_seeded():
    params = WoernerEggerParams(0.05, tuple(_sine_distribution().vector))
    first = woerner_egger_linear(params, 3, shots=200_000, seed=5)
    assert first == woerner_egger_linear(params, 3, shots=200_000, seed=5)
    assert abs(first - 4.0) < 0.5

def test_woerner_egger_for_arbitrary_values():
    values = [2 * k + 1 for k in range(8)]
    estimate = woerner_egger_rescaled(0.05, [1 / 8] * 8, values, WoernerEggerMode.QUANTUM)
    assert_allclose(estimate, 8.0, atol=1e-3)
    assert woerner_egger_rescaled(0.05, [0.5, 0.5], [3.0, 3.0]) == 3.0

@pytest.mark.parametrize("make_params", [
    lambda: WoernerEggerParams(0.6, (0.5, 0.5)),
    lambda: WoernerEggerParams(0.1, (0.5, 0.6)),
    lambda: WoernerEggerParams(0.1, (1 / 3,) * 3),
    lambda: WoernerEggerParams(0.1, (0.5, 0.5), (0.0, 2.0)),
])
def test_woerner_egger_parameter_validation(make_params):
    with pytest.raises(InputValidationError):
        make_params()

def test_finance_report_error():
    report = FinanceReport("payoff", 1.5, 1.25, {"mode": "exact"})
    assert report.abs_error == 0.25
    assert report.to_dict()["mode"] == "exact"

def test_payoff_with_zero_strike_is_the_expected_value():
    spec = PayoffSpec(0, PRICE, WeightSpec.sine_squared(3))
    expected = expected_value_discrete(PRICE, 3, 4).weighted_sum
    assert_allclose(payoff_expectation(spec, 3, 4).weighted_sum, expected, atol=1e-9)
    assert_allclose(payoff_oracle(spec), expected, atol=1e-9)

def test_payoff_above_every_value_is_zero():
    spec = PayoffSpec(12, PRICE, WeightSpec.sine_squared(3))
    assert payoff_oracle(spec) == 0.0
    assert_allclose(payoff_expectation(spec, 3, 4).weighted_sum, 0.0, atol=1e-9)
    assert_allclose(payoff_expectation_shifted(spec, 3, 4).weighted_sum, 0.0, atol=1e-9)

@pytest.mark.parametrize("weights", [_sine_distribution(), WeightSpec.sine_fourth(4).normalized()])
def test_value_at_risk_never_decreases_with_confidence(weights):
    alphas = np.linspace(0.02, 0.98, 25)
    cutoffs = [value_at_risk(VarQuery(weights, float(alpha)), weights.num_qubits).cutoff for alpha in alphas]
    assert cutoffs == sorted(cutoffs)
    assert cutoffs == [value_at_risk_oracle(weights, float(alpha)) for alpha in alphas]
