import re
from typing import Optional
from pyqip.errors import InputValidationError
from .binary_polynomial import BinaryPolynomial, Monomial

# Terms look like "7", "4*k1", "-5*k0*k1", "k2" or "3 k0 k1"; x<j> is accepted as an alias of k<j>.
_TERM_RE = re.compile(r"\s*([+-])?\s*([^+\-\s*][^+-]*)")
_VARIABLE_RE = re.compile(r"^[kx](\d+)$")

def parse_polynomial(text: str, num_vars: Optional[int] = None) -> BinaryPolynomial:
    """
    Parses the canonical text form of a binary polynomial.

    When `num_vars` is omitted it is inferred from the highest variable index.
    """
    source = text.strip()
    if not source:
        raise InputValidationError("Empty polynomial text")

    terms: dict[Monomial, int] = {}
    position = 0
    while position < len(source):
        match = _TERM_RE.match(source, position)
        if match is None or match.end() == position:
            raise InputValidationError(f"Cannot parse polynomial near '{source[position:]}'")
        sign, body = match.group(1), match.group(2).strip()
        if sign is None and position > 0:
            raise InputValidationError(f"Missing operator before '{body}'")
        coefficient, monomial = _parse_term(body)
        if sign == "-":
            coefficient = -coefficient
        terms[monomial] = terms.get(monomial, 0) + coefficient
        position = match.end()

    highest = max((j for monomial in terms for j in monomial), default=-1)
    if num_vars is None:
        num_vars = max(highest + 1, 1)
    elif highest >= num_vars:
        raise InputValidationError(f"Variable k{highest} does not exist in a {num_vars}-variable polynomial")
    return BinaryPolynomial(num_vars, terms)

def _parse_term(body: str) -> tuple[int, Monomial]:
    coefficient = 1
    variables: set[int] = set()
    for factor in re.split(r"\s*\*\s*|\s+", body):
        if not factor:
            raise InputValidationError(f"Missing factor in term '{body}'")
        if factor.isdigit():
            coefficient *= int(factor)
            continue
        variable = _VARIABLE_RE.match(factor)
        if variable is None:
            raise InputValidationError(f"Invalid factor '{factor}' in term '{body}'")
        variables.add(int(variable.group(1)))
    return coefficient, tuple(sorted(variables))
