import typer
from typing import Optional
from pyqip.common import BitOrder, Command
from .options import BIT_ORDER_OPTION, CSV_OPTION, M_OPTION, N_OPTION, OUTPUT_OPTION, POLY_OPTION, TABLE_OPTION, VERBOSE_OPTION
from .output import execute

circuit_app = typer.Typer()

@circuit_app.command("prep", help="Run a state preparation loader and dump its amplitudes and probabilities.")
def prep(
    loader: str = typer.Option(..., "--loader", help="rcos, sin4, sin8, ramp, uniform, trig, quantile, point, normal or file:<path>", rich_help_panel="Loader", show_default=False),
    n: int = typer.Option(..., "--n", help="Number of qubits of the loader", rich_help_panel="Loader", show_default=False),
    theta: Optional[float] = typer.Option(None, "--theta", help="Angle of the trig loader", rich_help_panel="Loader", show_default=False),
    cutoff: Optional[int] = typer.Option(None, "--cutoff", help="Cutoff l of the quantile loader", rich_help_panel="Loader", show_default=False),
    value: Optional[int] = typer.Option(None, "--value", help="Basis value of the point loader", rich_help_panel="Loader", show_default=False),
    mean: Optional[float] = typer.Option(None, "--mean", help="Mean of the normal loader", rich_help_panel="Loader", show_default=False),
    sigma: Optional[float] = typer.Option(None, "--sigma", help="Standard deviation of the normal loader", rich_help_panel="Loader", show_default=False),
    output: Optional[str] = OUTPUT_OPTION,
    csv: Optional[str] = CSV_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(
        verbose,
        command=Command.PREP,
        loader=loader,
        n=n,
        theta=theta,
        cutoff=cutoff,
        v0=value,
        mean=mean,
        sigma=sigma,
        output=output,
        csv=csv,
    )

@circuit_app.command("dict", help="Build the dictionary state of a polynomial and dump its (key, value) outcomes.")
def dictionary(
    n: Optional[int] = N_OPTION,
    m: Optional[int] = M_OPTION,
    poly: Optional[str] = POLY_OPTION,
    table: Optional[str] = TABLE_OPTION,
    bit_order: BitOrder = BIT_ORDER_OPTION,
    output: Optional[str] = OUTPUT_OPTION,
    csv: Optional[str] = CSV_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    execute(verbose, command=Command.DICT, n=n, m=m, poly=poly, table=table, bit_order=bit_order, output=output, csv=csv)
