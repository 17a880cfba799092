from dataclasses import dataclass, field

@dataclass(frozen=True)
class FinanceReport:
    """Quantum estimate of a finance quantity next to its classical brute-force value."""

    name: str
    quantum: float
    oracle: float
    details: dict = field(default_factory=dict)

    @property
    def abs_error(self) -> float:
        return abs(self.quantum - self.oracle)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "quantum": float(self.quantum),
            "oracle": float(self.oracle),
            "abs_error": float(self.abs_error),
            **self.details,
        }
