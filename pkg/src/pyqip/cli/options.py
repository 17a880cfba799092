import typer
from pyqip.common import BitOrder, EstimateMode

N_OPTION = typer.Option(None, "--n", help="Number of key qubits", rich_help_panel="Registers", show_default=False)
M_OPTION = typer.Option(None, "--m", help="Number of value qubits", rich_help_panel="Registers", show_default=False)
LOADER_OPTION = typer.Option(None, "--loader", help="Weight loader: sin4, rcos, sin8, uniform or file:<path> (default sin4)", rich_help_panel="Registers", show_default=False)

POLY_OPTION = typer.Option(None, "--poly", help="Binary polynomial, example: --poly \"7 + 4*k1 - 5*k0*k1\"", rich_help_panel="Function", show_default=False)
TABLE_OPTION = typer.Option(None, "--table", help="CSV file with k,value rows, converted to a polynomial", rich_help_panel="Function", show_default=False)
BIT_ORDER_OPTION = typer.Option(BitOrder.MSB0, "--bit-order", help="How k maps to the variables k0..k(n-1)", rich_help_panel="Function")

MODE_OPTION = typer.Option(EstimateMode.EXACT, "--mode", help="Read the amplitude exactly or estimate it from samples", rich_help_panel="Estimation")
SHOTS_OPTION = typer.Option(None, "--shots", help="Shots in sampled mode (default 8192 or the stored config)", rich_help_panel="Estimation", show_default=False)
SEED_OPTION = typer.Option(None, "--seed", help="Random seed in sampled mode (default 0 or the stored config)", rich_help_panel="Estimation", show_default=False)

OUTPUT_OPTION = typer.Option(None, "--output", help="Write the JSON result record to this file instead of stdout", rich_help_panel="Output", show_default=False)
CSV_OPTION = typer.Option(None, "--csv", help="Write the amplitude or outcome table to this CSV file", rich_help_panel="Output", show_default=False)
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Enable debug logging", rich_help_panel="Output")
