from enum import Enum

class GateKind(str, Enum):
    H = "H"
    X = "X"
    P = "P"
    RY = "RY"
    QFT = "QFT"
    IQFT = "IQFT"

    @property
    def is_fourier(self) -> bool:
        return self in (GateKind.QFT, GateKind.IQFT)

    @property
    def is_parametric(self) -> bool:
        return self in (GateKind.P, GateKind.RY)

class BitOrder(str, Enum):
    LSB0 = "lsb0" # k = sum k_j 2^j
    MSB0 = "msb0" # k = sum k_j 2^(n-1-j)

class EstimateMode(str, Enum):
    EXACT = "exact"
    SAMPLED = "sampled"

class WoernerEggerMode(str, Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"

class Command(str, Enum):
    PREP = "prep"
    DICT = "dict"
    EXPECT = "expect"
    PAYOFF = "payoff"
    VAR = "var"
    COUNT = "count"
    LINEAR_EXACT = "linear-exact"
    LINEAR_APPROX = "linear-approx"
    RATIONAL = "rational"
    WE = "we"
    PAPER_SUITE = "paper-suite"
