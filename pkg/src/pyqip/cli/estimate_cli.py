import typer
from typing import Optional
from pyqip.common import BitOrder, Command, EstimateMode, WoernerEggerMode
from .options import (
    BIT_ORDER_OPTION,
    LOADER_OPTION,
    M_OPTION,
    MODE_OPTION,
    N_OPTION,
    OUTPUT_OPTION,
    POLY_OPTION,
    SEED_OPTION,
    SHOTS_OPTION,
    TABLE_OPTION,
    VERBOSE_OPTION,
)
from .output import execute

estimate_app = typer.Typer()

SCALE_OPTION = typer.Option(None, "--c", help="Scale c in (0, 0.5]", rich_help_panel="Registers", show_default=False)

@estimate_app.command("expect", help="Weighted sum of hashed polynomial values, sum_k w_k h(f(k)), through the generalized inner product.")
def expect(
    n: Optional[int] = N_OPTION,
    m: Optional[int] = M_OPTION,
    loader: Optional[str] = LOADER_OPTION,
    hashes: Optional[str] = typer.Option(None, "--hash", help="Hash loader: ramp (h_v = v, default) or file:<path>", rich_help_panel="Registers", show_default=False),
    poly: Optional[str] = POLY_OPTION,
    table: Optional[str] = TABLE_OPTION,
    bit_order: BitOrder = BIT_ORDER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.EXPECT,
        n=n,
        m=m,
        loader=loader,
        b_loader=hashes,
        poly=poly,
        table=table,
        bit_order=bit_order,
        mode=mode,
        shots=shots,
        seed=seed,
        output=output,
    )

@estimate_app.command("payoff", help="Call payoff sum_{f(k) >= K} w_k (f(k) - K).")
def payoff(
    n: Optional[int] = N_OPTION,
    m: Optional[int] = M_OPTION,
    strike: Optional[int] = typer.Option(None, "--strike", help="Strike K", rich_help_panel="Registers", show_default=False),
    shifted: bool = typer.Option(False, "--shifted", help="Encode f - K in the signed window instead of rectifying f unsigned", rich_help_panel="Registers"),
    loader: Optional[str] = LOADER_OPTION,
    poly: Optional[str] = POLY_OPTION,
    table: Optional[str] = TABLE_OPTION,
    bit_order: BitOrder = BIT_ORDER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.PAYOFF,
        n=n,
        m=m,
        strike=strike,
        shifted=shifted,
        loader=loader,
        poly=poly,
        table=table,
        bit_order=bit_order,
        mode=mode,
        shots=shots,
        seed=seed,
        output=output,
    )

@estimate_app.command("var", help="Value at risk: smallest cutoff l whose cumulative probability reaches alpha.")
def var(
    n: Optional[int] = N_OPTION,
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Confidence level in (0, 1)", rich_help_panel="Registers", show_default=False),
    loader: Optional[str] = LOADER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(verbose, command=Command.VAR, n=n, alpha=alpha, loader=loader, mode=mode, shots=shots, seed=seed, output=output)

@estimate_app.command("count", help="Count the keys k with f(k) = v0.")
def count(
    n: Optional[int] = N_OPTION,
    m: Optional[int] = M_OPTION,
    v0: Optional[int] = typer.Option(None, "--v0", help="Target value v0, negative values allowed", rich_help_panel="Registers", show_default=False),
    poly: Optional[str] = POLY_OPTION,
    table: Optional[str] = TABLE_OPTION,
    bit_order: BitOrder = BIT_ORDER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.COUNT,
        n=n,
        m=m,
        v0=v0,
        poly=poly,
        table=table,
        bit_order=bit_order,
        mode=mode,
        shots=shots,
        seed=seed,
        output=output,
    )

@estimate_app.command("linear-exact", help="sum_k w_k (intercept + slope k) with the identity ramp loader.")
def linear_exact(
    n: Optional[int] = N_OPTION,
    intercept: float = typer.Option(0.0, "--intercept", help="Intercept of the linear function", rich_help_panel="Registers"),
    slope: float = typer.Option(1.0, "--slope", help="Slope of the linear function", rich_help_panel="Registers"),
    loader: Optional[str] = LOADER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.LINEAR_EXACT,
        n=n,
        intercept=intercept,
        slope=slope,
        loader=loader,
        mode=mode,
        shots=shots,
        seed=seed,
        output=output,
    )

@estimate_app.command("linear-approx", help="sum_k w_k (intercept + slope k) with the small-angle trig loader.")
def linear_approx(
    n: Optional[int] = N_OPTION,
    scale: Optional[float] = SCALE_OPTION,
    intercept: float = typer.Option(0.0, "--intercept", help="Intercept of the linear function", rich_help_panel="Registers"),
    slope: float = typer.Option(1.0, "--slope", help="Slope of the linear function", rich_help_panel="Registers"),
    loader: Optional[str] = LOADER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.LINEAR_APPROX,
        n=n,
        scale=scale,
        intercept=intercept,
        slope=slope,
        loader=loader,
        mode=mode,
        shots=shots,
        seed=seed,
        output=output,
    )

@estimate_app.command("rational", help="Expected value of the normalized rational function on the 4-qubit grid.")
def rational(
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(verbose, command=Command.RATIONAL, mode=mode, shots=shots, seed=seed, output=output)

@estimate_app.command("we", help="Woerner-Egger expected value from the probability of an ancilla rotation.")
def woerner_egger(
    n: Optional[int] = N_OPTION,
    scale: Optional[float] = SCALE_OPTION,
    we_mode: WoernerEggerMode = typer.Option(WoernerEggerMode.QUANTUM, "--we-mode", help="Evaluate the ancilla probability by formula or by simulating the circuit", rich_help_panel="Registers"),
    lower: Optional[float] = typer.Option(None, "--lower", help="Lower bound of the min-max mapping of k", rich_help_panel="Registers", show_default=False),
    upper: Optional[float] = typer.Option(None, "--upper", help="Upper bound of the min-max mapping of k", rich_help_panel="Registers", show_default=False),
    loader: Optional[str] = LOADER_OPTION,
    poly: Optional[str] = POLY_OPTION,
    table: Optional[str] = TABLE_OPTION,
    bit_order: BitOrder = BIT_ORDER_OPTION,
    mode: EstimateMode = MODE_OPTION,
    shots: Optional[int] = SHOTS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.WE,
        n=n,
        scale=scale,
        we_mode=we_mode,
        lower=lower,
        upper=upper,
        loader=loader,
        poly=poly,
        table=table,
        bit_order=bit_order,
        mode=mode,
        shots=shots,
        seed=seed,
        output=output,
    )
