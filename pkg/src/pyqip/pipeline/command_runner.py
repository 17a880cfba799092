import numpy as np
from dataclasses import dataclass
from typing import Callable, Optional
from pyqip.common import Command, EstimateMode
from pyqip.encoding import RegisterLayout, dictionary_outcomes
from pyqip.errors import InputValidationError
from pyqip.finance import (
    FinanceReport,
    PayoffSpec,
    VarQuery,
    WoernerEggerParams,
    count_oracle,
    count_preimages,
    cumulative_oracle,
    expected_rational,
    linear_expected_approx,
    linear_expected_exact,
    linear_oracle,
    payoff_expectation,
    payoff_expectation_shifted,
    payoff_oracle,
    value_at_risk,
    value_at_risk_oracle,
    woerner_egger_linear,
    woerner_egger_oracle,
    woerner_egger_rescaled,
)
from pyqip.innerprod import HashSpec, WeightSpec, hashed_sum_oracle, weighted_hashed_sum
from pyqip.logger import logger
from pyqip.polynomial import BinaryPolynomial, from_table, read_table_csv, read_value_csv, to_table
from pyqip.stateprep import LoaderFactory
from .paper_suite import run_paper_suite, suite_table
from .run_config import RunConfig

DEFAULT_WEIGHTS = "sin4"

@dataclass
class CommandOutcome:
    """Result record of one command, plus the optional CSV rows and a printable table."""

    record: dict
    rows: Optional[list[dict]] = None
    table: Optional[str] = None

class CommandRunner:
    def __init__(self, config: RunConfig):
        self._config = config
        self._handlers: dict[Command, Callable[[], tuple[dict, Optional[list[dict]]]]] = {
            Command.PREP: self._prep,
            Command.DICT: self._dict,
            Command.EXPECT: self._expect,
            Command.PAYOFF: self._payoff,
            Command.VAR: self._var,
            Command.COUNT: self._count,
            Command.LINEAR_EXACT: self._linear_exact,
            Command.LINEAR_APPROX: self._linear_approx,
            Command.RATIONAL: self._rational,
            Command.WE: self._woerner_egger,
        }

    def run(self) -> CommandOutcome:
        config = self._config
        logger().debug(f"Running '{config.command.value}' with {config.parameters()}")
        if config.command == Command.PAPER_SUITE:
            rows = run_paper_suite(jobs=config.jobs)
            record = {
                "command": config.command.value,
                "rows": [row.to_dict() for row in rows],
                "all_within_tolerance": all(row.within_tolerance for row in rows),
            }
            return CommandOutcome(record=record, table=suite_table(rows))

        result, rows = self._handlers[config.command]()
        record = {"command": config.command.value, "params": config.parameters(), "result": result}
        return CommandOutcome(record=record, rows=rows)

    @property
    def _sampling(self) -> dict:
        config = self._config
        return {"mode": config.mode, "shots": config.shots, "seed": config.seed}

    def _function(self) -> BinaryPolynomial:
        config = self._config
        if config.poly is not None:
            polynomial = BinaryPolynomial.from_text(config.poly, config.n)
        else:
            polynomial = from_table(read_table_csv(config.table, config.bit_order))
        if polynomial.num_vars != config.n:
            raise InputValidationError(f"Function has {polynomial.num_vars} variables, expected n={config.n}")
        return polynomial

    def _weights(self, normalized: bool = False) -> WeightSpec:
        spec = WeightSpec.named(self._config.loader or DEFAULT_WEIGHTS, self._config.n)
        return spec.normalized() if normalized else spec

    def _prep(self):
        config = self._config
        operator = LoaderFactory().create(
            config.loader,
            config.n,
            theta=config.theta,
            cutoff=config.cutoff,
            value=config.v0,
            mean=config.mean,
            sigma=config.sigma,
        )
        state = operator.program.run()
        result = {
            "label": operator.label,
            "qubits": operator.qubit_count,
            "normalization": float(operator.normalization),
            "gates": len(operator.program),
            "norm": float(state.norm()),
        }
        return result, state.to_rows()

    def _dict(self):
        config = self._config
        polynomial = self._function()
        rows = dictionary_outcomes(polynomial, RegisterLayout(config.n, config.m), config.bit_order)
        # pairs are read in the window the function fits
        reading = "signed_value" if min(to_table(polynomial, config.bit_order).values) < 0 else "value"
        result = {
            "polynomial": polynomial.to_text(),
            "outcomes": len(rows),
            "pairs": [[row["k"], row[reading]] for row in rows],
        }
        return result, rows

    def _expect(self):
        config = self._config
        polynomial = self._function()
        weights = self._weights()
        hashes = self._hashes()
        estimate = weighted_hashed_sum(weights, hashes, polynomial, config.bit_order, **self._sampling)
        oracle = hashed_sum_oracle(weights, hashes, polynomial, config.bit_order)
        report = FinanceReport("expect", estimate.weighted_sum, oracle, estimate.to_dict())
        return {**report.to_dict(), "polynomial": polynomial.to_text()}, None

    def _hashes(self) -> HashSpec:
        config = self._config
        if config.b_loader is None or config.b_loader == "ramp":
            return HashSpec.identity(config.m)
        if config.b_loader.startswith("file:"):
            hashes = HashSpec.from_values(read_value_csv(config.b_loader[len("file:"):]))
            if hashes.num_qubits != config.m:
                raise InputValidationError(f"{config.b_loader} holds {1 << hashes.num_qubits} hashes, expected {1 << config.m}")
            return hashes
        raise InputValidationError(f"Unknown hash loader '{config.b_loader}', expected ramp or file:<path>")

    def _payoff(self):
        config = self._config
        spec = PayoffSpec(config.strike, self._function(), self._weights())
        estimate_payoff = payoff_expectation_shifted if config.shifted else payoff_expectation
        estimate = estimate_payoff(spec, config.n, config.m, config.bit_order, **self._sampling)
        report = FinanceReport("payoff", estimate.weighted_sum, payoff_oracle(spec, config.bit_order), estimate.to_dict())
        return report.to_dict(), None

    def _var(self):
        config = self._config
        # named profiles are shapes; a file holds the distribution itself, missing mass included
        from_file = (config.loader or "").startswith("file:")
        query = VarQuery(self._weights(normalized=not from_file), config.alpha)
        result = value_at_risk(query, config.n, **self._sampling)
        oracle_cutoff = value_at_risk_oracle(query.weights, config.alpha)
        return {
            **result.to_dict(),
            "oracle_cutoff": oracle_cutoff,
            "oracle_cumulative": cumulative_oracle(query.weights, oracle_cutoff),
        }, None

    def _count(self):
        config = self._config
        polynomial = self._function()
        result = count_preimages(polynomial, config.v0, config.n, config.m, config.bit_order, **self._sampling)
        return {**result.to_dict(), "oracle": count_oracle(polynomial, config.v0, config.m, config.bit_order)}, None

    def _linear_exact(self):
        config = self._config
        weights = self._weights()
        value = linear_expected_exact(config.intercept, config.slope, config.n, weights, **self._sampling)
        oracle = linear_oracle(config.intercept, config.slope, weights)
        details = {"intercept": config.intercept, "slope": config.slope}
        return FinanceReport("linear-exact", value, oracle, details).to_dict(), None

    def _linear_approx(self):
        config = self._config
        weights = self._weights()
        value = linear_expected_approx(config.scale, config.n, weights, config.intercept, config.slope, **self._sampling)
        oracle = linear_oracle(config.intercept, config.slope, weights)
        details = {"intercept": config.intercept, "slope": config.slope, "scale": config.scale}
        return FinanceReport("linear-approx", value, oracle, details).to_dict(), None

    def _rational(self):
        return expected_rational(**self._sampling).to_dict(), None

    def _woerner_egger(self):
        config = self._config
        weights = self._weights()
        probabilities = weights.vector / weights.total()
        shots = config.shots if config.mode == EstimateMode.SAMPLED else None
        if config.poly is None and config.table is None:
            params = WoernerEggerParams(config.scale, tuple(probabilities))
            bounds = None if config.lower is None else (config.lower, config.upper)
            estimate = woerner_egger_linear(params, config.n, bounds, config.we_mode, shots, config.seed)
            low, high = bounds or (0.0, float(weights.size - 1))
            oracle = low + (high - low) * (woerner_egger_oracle(params) + 1.0) / 2.0
        else:
            values = np.array(to_table(self._function(), config.bit_order).values, dtype=np.float64)
            estimate = woerner_egger_rescaled(config.scale, probabilities, values, config.we_mode, shots, config.seed)
            oracle = float(np.dot(probabilities, values))
        details = {"we_mode": config.we_mode.value, "scale": config.scale}
        return FinanceReport("we", estimate, oracle, details).to_dict(), None
