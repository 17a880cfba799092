from dataclasses import dataclass, field
from typing import Mapping, Sequence
from pyqip.errors import InputValidationError

Monomial = tuple[int, ...]

@dataclass(frozen=True)
class BinaryPolynomial:
    """
    Multilinear polynomial with integer coefficients over binary variables x_0..x_{n-1}.

    `terms` maps a sorted tuple of variable indices J to the coefficient c_J of
    prod_{j in J} x_j; the empty tuple is the constant term. Zero coefficients
    are never stored.
    """

    num_vars: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_vars < 1:
            raise InputValidationError(f"A polynomial needs at least one variable, got {self.num_vars}")
        collected: dict[Monomial, int] = {}
        for monomial, coefficient in self.terms.items():
            key = tuple(sorted(set(int(j) for j in monomial)))
            if key and (key[0] < 0 or key[-1] >= self.num_vars):
                raise InputValidationError(f"Monomial {monomial} uses a variable outside 0..{self.num_vars - 1}")
            if int(coefficient) != coefficient:
                raise InputValidationError(f"Coefficient {coefficient} of {monomial} is not an integer")
            collected[key] = collected.get(key, 0) + int(coefficient)
        object.__setattr__(self, "terms", {k: collected[k] for k in sorted(collected, key=_monomial_order) if collected[k] != 0})

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    @staticmethod
    def zero(num_vars: int) -> "BinaryPolynomial":
        return BinaryPolynomial(num_vars, {})

    @staticmethod
    def constant(value: int, num_vars: int) -> "BinaryPolynomial":
        return BinaryPolynomial(num_vars, {(): value})

    @staticmethod
    def variable(index: int, num_vars: int) -> "BinaryPolynomial":
        return BinaryPolynomial(num_vars, {(index,): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(monomial) for monomial in self.terms), default=0)

    @property
    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def evaluate(self, bits: Sequence[int]) -> int:
        if len(bits) != self.num_vars:
            raise InputValidationError(f"Expected {self.num_vars} bits, got {len(bits)}")
        if any(bit not in (0, 1) for bit in bits):
            raise InputValidationError(f"Bits must be 0 or 1, got {list(bits)}")
        return sum(
            coefficient
            for monomial, coefficient in self.terms.items()
            if all(bits[j] for j in monomial)
        )

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        self._check_compatible(other)
        merged = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            merged[monomial] = merged.get(monomial, 0) + coefficient
        return BinaryPolynomial(self.num_vars, merged)

    def __neg__(self) -> "BinaryPolynomial":
        return self.scaled(-1)

    def __sub__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return self + (-other)

    def scaled(self, factor: int) -> "BinaryPolynomial":
        if int(factor) != factor:
            raise InputValidationError(f"Scale factor must be an integer, got {factor}")
        return BinaryPolynomial(self.num_vars, {m: c * int(factor) for m, c in self.terms.items()})

    def shifted(self, offset: int) -> "BinaryPolynomial":
        return self + BinaryPolynomial.constant(offset, self.num_vars)

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        text = ""
        for monomial, coefficient in self.terms.items():
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            factors = [f"k{j}" for j in monomial]
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            term = "*".join(factors)
            if not text:
                text = f"-{term}" if sign == "-" else term
            else:
                text += f" {sign} {term}"
        return text

    @staticmethod
    def from_text(text: str, num_vars: int | None = None) -> "BinaryPolynomial":
        from .polynomial_parser import parse_polynomial
        return parse_polynomial(text, num_vars)

    def __str__(self) -> str:
        return self.to_text()

    def _check_compatible(self, other: "BinaryPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise InputValidationError(
                f"Polynomials over {self.num_vars} and {other.num_vars} variables cannot be combined"
            )

def _monomial_order(monomial: Monomial) -> tuple[int, Monomial]:
    return len(monomial), monomial

