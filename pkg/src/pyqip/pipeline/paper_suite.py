import multiprocess as mp
from dataclasses import dataclass
from typing import Callable, Optional
from tqdm import tqdm
from pyqip.common import EstimateMode, WoernerEggerMode
from pyqip.finance import (
    CountResult,
    PayoffSpec,
    VarQuery,
    WoernerEggerParams,
    count_preimages,
    cumulative_probability,
    expected_rational,
    expected_value_discrete,
    payoff_expectation,
    ramp_weighted_sum,
    trig_weighted_sum,
    value_at_risk,
    woerner_egger_linear,
)
from pyqip.innerprod import WeightSpec, simple_inner_product
from pyqip.logger import ProcessLogger, logger
from pyqip.polynomial import BinaryPolynomial
from pyqip.stateprep import identity_ramp, sin4

EXPECTED_VALUE_POLYNOMIAL = "7 + 4*k1 - 5*k0*k1 - 2*k0*k2"
COUNTING_POLYNOMIAL = "2*k1 - k0*k1 - 3*k0*k2"
SAMPLED_SHOTS = 1_000_000

@dataclass(frozen=True)
class SuiteCase:
    instance: str
    quantity: str
    reference: float
    tolerance: float
    source: str
    evaluate: Callable[[], float]

@dataclass(frozen=True)
class SuiteRow:
    instance: str
    quantity: str
    source: str
    reference: float
    computed: float
    tolerance: float

    @property
    def abs_diff(self) -> float:
        return abs(self.computed - self.reference)

    @property
    def within_tolerance(self) -> bool:
        return self.abs_diff <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "quantity": self.quantity,
            "source": self.source,
            "reference": float(self.reference),
            "computed": float(self.computed),
            "tolerance": float(self.tolerance),
            "abs_diff": float(self.abs_diff),
            "within_tolerance": self.within_tolerance,
        }

def _expected_value(mode: EstimateMode = EstimateMode.EXACT):
    polynomial = BinaryPolynomial.from_text(EXPECTED_VALUE_POLYNOMIAL, 3)
    return expected_value_discrete(polynomial, 3, 4, "sin4", mode=mode, shots=SAMPLED_SHOTS, seed=0)

def _payoff_strike_7() -> float:
    polynomial = BinaryPolynomial.from_text(EXPECTED_VALUE_POLYNOMIAL, 3)
    spec = PayoffSpec(7, polynomial, WeightSpec.sine_squared(3))
    return payoff_expectation(spec, 3, 4).weighted_sum

def _sine_distribution() -> WeightSpec:
    return WeightSpec.sine_squared(3).normalized()

def _count(value: int) -> CountResult:
    polynomial = BinaryPolynomial.from_text(COUNTING_POLYNOMIAL, 3)
    return count_preimages(polynomial, value, 3, 3)

def _woerner_egger_mean() -> float:
    weights = WeightSpec.sine_squared(3)
    params = WoernerEggerParams(0.05, tuple(weights.vector / weights.total()))
    return woerner_egger_linear(params, 3, mode=WoernerEggerMode.QUANTUM)

PAPER_CASES: tuple[SuiteCase, ...] = (
    SuiteCase("expected-value", "amplitude", 0.17835, 5e-5, "published",
              lambda: _expected_value().amplitude0.real),
    SuiteCase("expected-value", "weighted_sum", 30.76777, 1e-3, "published",
              lambda: _expected_value().weighted_sum),
    SuiteCase("expected-value", "sampled_magnitude", 0.17835, 1e-2, "published",
              lambda: _expected_value(EstimateMode.SAMPLED).amplitude0.real),
    SuiteCase("payoff", "strike_7", 5.414213562373095, 1e-8, "closed form", _payoff_strike_7),
    SuiteCase("value-at-risk", "cumulative_l3", 0.375, 1e-9, "closed form",
              lambda: cumulative_probability(_sine_distribution(), 3).weighted_sum),
    SuiteCase("value-at-risk", "cutoff_alpha_0.375", 3, 0, "closed form",
              lambda: value_at_risk(VarQuery(_sine_distribution(), 0.375)).cutoff),
    SuiteCase("rational", "classical", 1.33431, 2e-2, "published",
              lambda: expected_rational().classical),
    SuiteCase("rational", "quantum", 1.34845, 3e-2, "published",
              lambda: expected_rational().quantum),
    SuiteCase("linear-exact", "inner_product", 0.77998, 1e-3, "published",
              lambda: simple_inner_product(sin4(3), identity_ramp(3)).real),
    SuiteCase("linear-exact", "moment", 15.98493, 2e-2, "published",
              lambda: ramp_weighted_sum("sin4", 3).weighted_sum),
    SuiteCase("linear-exact", "one_plus_2k", 36.0, 1e-4, "published",
              lambda: 4.0 + 2.0 * ramp_weighted_sum("sin4", 3).weighted_sum),
    SuiteCase("linear-approx", "amplitude_c0.1", 0.02041, 1e-4, "published",
              lambda: trig_weighted_sum(0.1, 3).amplitude0.real),
    SuiteCase("linear-approx", "moment_c0.1", 15.99768, 1e-2, "published",
              lambda: trig_weighted_sum(0.1, 3).weighted_sum),
    SuiteCase("linear-approx", "one_plus_2k_c0.1", 35.99536, 2e-2, "published",
              lambda: 4.0 + 2.0 * trig_weighted_sum(0.1, 3).weighted_sum),
    SuiteCase("counting", "amplitude", 0.375, 1e-9, "published",
              lambda: _count(0).amplitude0.real),
    SuiteCase("counting", "count_v0_0", 3, 0, "published", lambda: _count(0).count),
    SuiteCase("counting", "count_v0_-3", 1, 0, "published", lambda: _count(-3).count),
    SuiteCase("woerner-egger", "mean_c0.05", 4.0, 1e-2, "closed form", _woerner_egger_mean),
)

def evaluate_case(case: SuiteCase) -> SuiteRow:
    computed = float(case.evaluate())
    return SuiteRow(case.instance, case.quantity, case.source, float(case.reference), computed, float(case.tolerance))

def run_paper_suite(jobs: int = 1, cases: Optional[tuple[SuiteCase, ...]] = None) -> list[SuiteRow]:
    """
    Evaluates every regression instance and returns the rows in case order.
    With jobs > 1 the instances are spread over a process pool.
    """
    cases = PAPER_CASES if cases is None else cases
    process_logger = ProcessLogger(total_steps=2, job="paper-suite")
    process_logger.step(f"evaluating {len(cases)} regression instances with {jobs} job(s)")
    if jobs > 1:
        with mp.Pool(processes=jobs) as pool:
            rows = list(tqdm(pool.imap(evaluate_case, cases), total=len(cases), desc="Paper suite", disable=None))
    else:
        rows = [evaluate_case(case) for case in tqdm(cases, desc="Paper suite", disable=None)]

    process_logger.step("comparing against reference values")
    failed = [row for row in rows if not row.within_tolerance]
    for row in failed:
        logger().warning(f"{row.instance}/{row.quantity}: {row.computed:.8f} vs {row.reference} (tol {row.tolerance})")
    return rows

def suite_table(rows: list[SuiteRow]) -> str:
    header = f"{'instance':<16} {'quantity':<20} {'reference':>14} {'computed':>14} {'|diff|':>10} {'tol':>8}  ok"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row.instance:<16} {row.quantity:<20} {row.reference:>14.8g} {row.computed:>14.8f} "
            f"{row.abs_diff:>10.2e} {row.tolerance:>8.0e}  {'yes' if row.within_tolerance else 'NO'}"
        )
    return "\n".join(lines)
