import json
import typer
from pyqip.common import ConfigService

config_app = typer.Typer(
    help="Manage stored defaults: output_dir, shots, seed and jobs",
    invoke_without_command=False,
    add_completion=False,
)

_INT_KEYS = ("shots", "seed", "jobs")

@config_app.command("show", help="Show the stored defaults.")
def show():
    typer.echo(json.dumps(ConfigService.get_all(), indent=2, sort_keys=True))
    output_dir = ConfigService.output_dir()
    if output_dir:
        typer.echo(f"Effective output directory: {output_dir}", err=True)

@config_app.command("set", help="Store a default, example: pyqip config set shots 100000")
def set_value(
    key: str = typer.Argument(..., help=f"One of {', '.join(ConfigService.KNOWN_KEYS)}"),
    value: str = typer.Argument(..., help="Value to store"),
):
    if key not in ConfigService.KNOWN_KEYS:
        typer.echo(f"Error: unknown key '{key}', expected one of {', '.join(ConfigService.KNOWN_KEYS)}", err=True)
        raise typer.Exit(code=2)
    if key in _INT_KEYS:
        try:
            parsed = int(value)
        except ValueError:
            typer.echo(f"Error: '{key}' must be an integer, got '{value}'", err=True)
            raise typer.Exit(code=2)
        ConfigService.set(key, parsed)
    else:
        ConfigService.set(key, value)
    typer.echo(f"{key} stored.")

@config_app.command("unset", help="Remove a stored default.")
def unset(key: str = typer.Argument(..., help="Key to remove")):
    if not ConfigService.remove(key):
        typer.echo(f"'{key}' was not set.")
        return
    typer.echo(f"{key} removed.")
