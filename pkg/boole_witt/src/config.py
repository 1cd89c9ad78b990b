"""
Run configuration: parameter grids for the verification harness and the
term budget of the k-fold fermionic sums.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List

try:  # package import
    from .errors import InvalidParameter
except ImportError:  # script import fallback
    from errors import InvalidParameter  # type: ignore

__all__ = ["GridConfig", "term_budget", "BUDGET_ENV_VAR", "DEFAULT_TERM_BUDGET"]

BUDGET_ENV_VAR = "BOOLE_WITT_TERM_BUDGET"
DEFAULT_TERM_BUDGET = 10 ** 7


def term_budget() -> int:
    """Term budget for fermionic_sum_multi, from the environment or the default."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_TERM_BUDGET
    try:
        value = int(raw.strip())
    except ValueError:
        raise InvalidParameter(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise InvalidParameter(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    return value


def _fr(*values) -> List[Fraction]:
    return [Fraction(v) for v in values]


@dataclass
class GridConfig:
    """
    Parameter grids of a verification run.

    Exact identities are checked as polynomial equalities in x, so only
    lambda, k and the index bound vary for them. ``thm1_xs`` are the rational
    points of the exact thm1 route; the p-adic route has its own grid.
    """

    lambdas: List[Fraction] = field(default_factory=lambda: _fr(1, 2, 3, "1/2", "-1/3"))
    n_max: int = 12
    k_max: int = 4
    thm1_xs: List[Fraction] = field(default_factory=lambda: _fr(0, 1, 2, "-1/2"))

    # p-adic route
    primes: List[int] = field(default_factory=lambda: [3, 5, 7])
    levels: List[int] = field(default_factory=lambda: [1, 2, 3, 4])
    padic_n_max: int = 5
    padic_k_max: int = 2
    padic_lambdas: List[Fraction] = field(default_factory=lambda: _fr(1, 2, 4))
    padic_xs: List[Fraction] = field(default_factory=lambda: _fr(0, 1, 2))
    slack: int = 0

    # functional equation
    eq2_samples: int = 50
    eq2_degree: int = 10
    seed: int = 20240101

    ids: List[str] = field(default_factory=list)

    @classmethod
    def empty(cls) -> "GridConfig":
        """A config whose every grid is empty: verify_all returns no cases."""
        return cls(
            lambdas=[], n_max=-1, k_max=0, thm1_xs=[],
            primes=[], levels=[], padic_n_max=-1, padic_k_max=0,
            padic_lambdas=[], padic_xs=[], eq2_samples=0,
        )

    def with_overrides(self, **changes) -> "GridConfig":
        """Copy with the given fields replaced; None values are ignored."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def selects(self, identity_id: str) -> bool:
        return not self.ids or identity_id in self.ids
