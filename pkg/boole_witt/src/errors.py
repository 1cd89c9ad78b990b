"""
Exception types shared across the boole_witt modules.

Each error keeps the offending values as attributes so callers (the verify
harness, the CLI) can report them without parsing messages.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional


class BooleWittError(Exception):
    """Base class for all domain errors raised by this package."""


class IndexOutOfRange(BooleWittError, IndexError):
    """Raised when a table or sequence index lies outside its valid range."""

    def __init__(self, message: str, n: Optional[int] = None, l: Optional[int] = None):
        self.n = n
        self.l = l
        super().__init__(message)


class NonUnitConstantTerm(BooleWittError, ZeroDivisionError):
    """Raised when a series with a non-invertible constant term is inverted."""


class NonzeroInnerConstant(BooleWittError, ValueError):
    """Raised when composing with an inner series whose constant term is not 0."""


class RingMismatch(BooleWittError, TypeError):
    """Raised when series over different coefficient rings are combined."""


class ZeroLambda(BooleWittError, ValueError):
    """Raised when the Euler-expansion route is asked for lambda = 0."""

    def __init__(self, message: str = "lambda must be nonzero on the Euler-expansion route"):
        super().__init__(message)


class DenominatorNotUnit(BooleWittError, ValueError):
    """Raised when a rational cannot be embedded because p divides its denominator."""

    def __init__(self, value: Fraction, p: int):
        self.value = value
        self.p = p
        super().__init__(f"denominator of {value} is divisible by p={p}")


class BudgetExceeded(BooleWittError, RuntimeError):
    """Raised when a fermionic sum would exceed the configured term budget."""

    def __init__(self, cost: int, budget: int):
        self.cost = cost
        self.budget = budget
        super().__init__(f"fermionic sum needs ~{cost} terms, budget is {budget}")


class InvalidParameter(BooleWittError, ValueError):
    """Raised by the validator for out-of-domain parameters (p, k, ids, ...)."""


class RationalParseError(BooleWittError, ValueError):
    """Raised when a rational or grid string fails to parse, with optional position info."""

    def __init__(self, message: str, position: int | None = None, line: int | None = None, col: int | None = None):
        self.position = position
        self.line = line
        self.col = col
        if line is not None and col is not None:
            super().__init__(f"{message} (line {line}, col {col})")
        else:
            super().__init__(message)
