from dataclasses import dataclass, replace
from typing import Optional
from pyqip.common import EstimateMode

@dataclass(frozen=True)
class EstimateResult:
    """
    Amplitude of |0...0> read at the end of a pattern and the weighted sum it encodes.

    In exact mode weighted_sum = rescale_factor * Re(amplitude0). In sampled mode
    amplitude0 is the magnitude estimate sqrt(count(0)/shots).
    """

    amplitude0: complex
    weighted_sum: float
    a_used: float
    b_used: float
    rescale_factor: float
    mode: EstimateMode = EstimateMode.EXACT
    shots: Optional[int] = None
    seed: Optional[int] = None

    def rescaled(self, factor: float) -> "EstimateResult":
        return replace(
            self,
            weighted_sum=self.weighted_sum * factor,
            rescale_factor=self.rescale_factor * factor,
        )

    def to_dict(self) -> dict:
        return {
            "amplitude0_re": float(self.amplitude0.real),
            "amplitude0_im": float(self.amplitude0.imag),
            "weighted_sum": float(self.weighted_sum),
            "a": float(self.a_used),
            "b": float(self.b_used),
            "rescale": float(self.rescale_factor),
            "mode": self.mode.value,
            "shots": self.shots,
            "seed": self.seed,
        }

    @staticmethod
    def from_dict(data: dict) -> "EstimateResult":
        return EstimateResult(
            amplitude0=complex(data["amplitude0_re"], data["amplitude0_im"]),
            weighted_sum=data["weighted_sum"],
            a_used=data["a"],
            b_used=data["b"],
            rescale_factor=data["rescale"],
            mode=EstimateMode(data["mode"]),
            shots=data.get("shots"),
            seed=data.get("seed"),
        )
