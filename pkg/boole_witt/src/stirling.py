"""
Stirling numbers of the first kind (signed and unsigned) and second kind.

Tables are built by the triangular recurrences and kept for reuse; a second,
series-based computation of S2 exists as an independent cross-check.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Dict, List, Tuple

try:  # package import
    from .errors import IndexOutOfRange
    from .powerseries import exp_minus_one
except ImportError:  # script import fallback
    from errors import IndexOutOfRange  # type: ignore
    from powerseries import exp_minus_one  # type: ignore

__all__ = [
    "StirlingKind",
    "StirlingTable",
    "stirling_table",
    "stirling1",
    "stirling2",
    "stirling1_unsigned",
    "stirling2_via_series",
    "table_rows",
]

logger = logging.getLogger(__name__)


class StirlingKind(str, Enum):
    FIRST_SIGNED = "s1"
    FIRST_UNSIGNED = "s1u"
    SECOND = "s2"


@dataclass(frozen=True)
class StirlingTable:
    """Triangle values[n][l] for 0 <= l <= n <= max_n."""

    kind: StirlingKind
    max_n: int
    values: Tuple[Tuple[int, ...], ...]

    def get(self, n: int, l: int) -> int:
        if n < 0 or n > self.max_n:
            raise IndexOutOfRange(f"n={n} outside table 0..{self.max_n}", n=n, l=l)
        if l < 0 or l > n:
            return 0
        return self.values[n][l]


# rows grown on demand per kind; a published list is never mutated
_ROWS: Dict[StirlingKind, List[List[int]]] = {kind: [[1]] for kind in StirlingKind}
_ROWS_LOCK = threading.Lock()


def _next_row(kind: StirlingKind, prev: List[int], n: int) -> List[int]:
    """Row n+1 from row n."""
    row = [0] * (n + 2)
    for l in range(n + 2):
        below = prev[l - 1] if l >= 1 else 0
        same = prev[l] if l <= n else 0
        if kind is StirlingKind.FIRST_SIGNED:
            row[l] = below - n * same
        elif kind is StirlingKind.FIRST_UNSIGNED:
            row[l] = below + n * same
        else:
            row[l] = l * same + below
    return row


def _ensure(kind: StirlingKind, max_n: int) -> List[List[int]]:
    rows = _ROWS[kind]
    if len(rows) > max_n:
        return rows
    with _ROWS_LOCK:
        rows = _ROWS[kind]
        if len(rows) > max_n:
            return rows
        logger.debug("extending %s table from %d to %d", kind.value, len(rows) - 1, max_n)
        new_rows = list(rows)
        while len(new_rows) <= max_n:
            n = len(new_rows) - 1
            new_rows.append(_next_row(kind, new_rows[n], n))
        _ROWS[kind] = new_rows
    return new_rows


def stirling_table(kind: StirlingKind | str, max_n: int) -> StirlingTable:
    """Return the memoised triangle of the given kind up to max_n."""
    kind = StirlingKind(kind)
    if max_n < 0:
        raise IndexOutOfRange(f"max_n must be nonnegative, got {max_n}", n=max_n)
    rows = _ensure(kind, max_n)
    return StirlingTable(kind=kind, max_n=max_n, values=tuple(tuple(r) for r in rows[: max_n + 1]))


def _lookup(kind: StirlingKind, n: int, l: int) -> int:
    if n < 0 or l < 0 or l > n:
        raise IndexOutOfRange(f"Stirling index ({n}, {l}) outside 0 <= l <= n", n=n, l=l)
    return _ensure(kind, n)[n][l]


def stirling1(n: int, l: int) -> int:
    """Signed S1(n, l): coefficient of x^l in (x)_n."""
    return _lookup(StirlingKind.FIRST_SIGNED, n, l)


def stirling1_unsigned(n: int, l: int) -> int:
    """Bracket [n, l] = (-1)^(n-l) S1(n, l): coefficient of x^l in x^(n)."""
    return _lookup(StirlingKind.FIRST_UNSIGNED, n, l)


def stirling2(n: int, l: int) -> int:
    """S2(n, l): partitions of an n-set into l blocks."""
    return _lookup(StirlingKind.SECOND, n, l)


def stirling2_via_series(n: int, l: int) -> int:
    """S2(n, l) read off (e^t - 1)^l = l! sum_m S2(m, l) t^m / m!."""
    if n < 0 or l < 0 or l > n:
        raise IndexOutOfRange(f"Stirling index ({n}, {l}) outside 0 <= l <= n", n=n, l=l)
    power = exp_minus_one(n) ** l
    value = power.coefficient(n) * factorial(n) / factorial(l)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral S2({n}, {l}) = {value}")
    return value.numerator


def table_rows(kind: StirlingKind | str, max_n: int) -> List[Tuple[int, int, int]]:
    """(n, l, value) rows in lexicographic order, for the CSV dump."""
    table = stirling_table(kind, max_n)
    return [(n, l, table.values[n][l]) for n in range(max_n + 1) for l in range(n + 1)]
