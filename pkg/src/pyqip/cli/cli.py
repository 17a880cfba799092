import importlib.metadata
import typer
from .circuit_cli import circuit_app
from .estimate_cli import estimate_app
from .suite_cli import suite_app
from .config_cli import config_app

def get_version() -> str:
    try:
        return importlib.metadata.version("pyqip")
    except importlib.metadata.PackageNotFoundError:
        from pyqip import __version__
        return __version__

app = typer.Typer(
    help="pyqip, quantum inner products on a statevector simulator",
    invoke_without_command=True,
    add_completion=False,
)
app.add_typer(circuit_app)
app.add_typer(estimate_app)
app.add_typer(suite_app)
app.add_typer(config_app, name="config")

@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(False, "--version", help="Show version and exit"),
):
    if version:
        typer.echo(f"pyqip {get_version()}")
        raise typer.Exit()

    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit()
