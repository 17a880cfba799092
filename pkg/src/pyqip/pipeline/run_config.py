from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pyqip.common import BitOrder, Command, EstimateMode, WoernerEggerMode
from pyqip.sim import MAX_QUBITS

class BaseConfigModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

_REQUIRED_FIELDS: dict[Command, tuple[str, ...]] = {
    Command.PREP: ("loader", "n"),
    Command.DICT: ("n", "m"),
    Command.EXPECT: ("n", "m"),
    Command.PAYOFF: ("n", "m", "strike"),
    Command.VAR: ("n", "alpha"),
    Command.COUNT: ("n", "m", "v0"),
    Command.LINEAR_EXACT: ("n",),
    Command.LINEAR_APPROX: ("n", "scale"),
    Command.RATIONAL: (),
    Command.WE: ("n", "scale"),
    Command.PAPER_SUITE: (),
}

_FUNCTION_COMMANDS = {Command.DICT, Command.EXPECT, Command.PAYOFF, Command.COUNT}
_TABLE_COMMANDS = {Command.PREP, Command.DICT}

class RunConfig(BaseConfigModel):
    """One CLI command with its parameters, validated before any simulation runs."""

    command: Command
    n: Optional[int] = Field(default=None, ge=1, le=MAX_QUBITS)
    m: Optional[int] = Field(default=None, ge=1, le=MAX_QUBITS)
    loader: Optional[str] = None
    b_loader: Optional[str] = None
    poly: Optional[str] = None
    table: Optional[str] = None
    bit_order: BitOrder = BitOrder.MSB0
    strike: Optional[int] = None
    shifted: bool = False
    cutoff: Optional[int] = Field(default=None, ge=0)
    alpha: Optional[float] = None
    scale: Optional[float] = None
    v0: Optional[int] = None
    theta: Optional[float] = None
    mean: Optional[float] = None
    sigma: Optional[float] = None
    intercept: float = 0.0
    slope: float = 1.0
    lower: Optional[float] = None
    upper: Optional[float] = None
    we_mode: WoernerEggerMode = WoernerEggerMode.QUANTUM
    mode: EstimateMode = EstimateMode.EXACT
    shots: int = Field(default=8192, ge=1)
    seed: int = 0
    jobs: int = Field(default=1, ge=1)
    output: Optional[str] = None
    csv: Optional[str] = None

    @field_validator("alpha")
    @classmethod
    def validate_alpha(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not 0.0 < v < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        return v

    @field_validator("scale")
    @classmethod
    def validate_scale(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not 0.0 < v <= 0.5:
            raise ValueError("scale c must lie in (0, 0.5]")
        return v

    @field_validator("sigma")
    @classmethod
    def validate_sigma(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and v <= 0:
            raise ValueError("sigma must be greater than 0")
        return v

    @model_validator(mode="after")
    def validate_command_parameters(self) -> "RunConfig":
        missing = [name for name in _REQUIRED_FIELDS[self.command] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"'{self.command.value}' needs: {', '.join(missing)}")
        if self.poly is not None and self.table is not None:
            raise ValueError("Only one of poly or table can be provided")
        if self.command in _FUNCTION_COMMANDS and self.poly is None and self.table is None:
            raise ValueError(f"'{self.command.value}' needs a function: poly or table")
        if self.csv is not None and self.command not in _TABLE_COMMANDS:
            raise ValueError(f"'{self.command.value}' has no amplitude or outcome table to write as CSV")
        if (self.lower is None) != (self.upper is None):
            raise ValueError("lower and upper must be given together")
        if self.lower is not None and self.lower >= self.upper:
            raise ValueError("lower must be smaller than upper")
        return self

    def parameters(self) -> dict:
        """Parameters echoed into result records: everything set except output locations."""
        data = self.model_dump(mode="json", exclude={"output", "csv", "jobs"})
        return {key: value for key, value in data.items() if value is not None}
