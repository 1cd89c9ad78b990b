"""
Validation utilities and the canonical name sets shared by the CLI,
the verify harness and the p-adic module.

- validate_prime(p): p must be an odd prime
- validate_order(k): k must be a positive integer
- validate_name(kind, name): membership in one of the canonical sets,
  with a "did you mean" suggestion on failure
"""

from __future__ import annotations

import difflib
from typing import Dict, Set, Tuple

try:  # package import
    from .errors import InvalidParameter
except ImportError:  # script import fallback
    from errors import InvalidParameter  # type: ignore

VALID_SEQUENCES: Set[str] = {"euler", "boole", "boole2", "changhee"}
VALID_TABLE_KINDS: Set[str] = {"s1", "s1u", "s2"}
VALID_FORMATS: Set[str] = {"plain", "json", "csv"}
VALID_ROUTES: Set[str] = {"gf", "euler"}
VALID_KINDS: Set[str] = {"first", "second"}

# canonical run order of the verification harness
IDENTITY_ORDER: Tuple[str, ...] = (
    "eq2",
    "thm1",
    "witt",
    "thm2",
    "remark",
    "eq12",
    "thm3",
    "thm4a",
    "thm4b",
    "thm5a",
    "thm5b",
    "thm6a",
    "thm6b_printed",
    "thm6b_corrected",
)
VALID_IDENTITIES: Set[str] = set(IDENTITY_ORDER)

# identities known to fail; their failures do not fail a run
EXPECTED_FAIL_IDENTITIES: Set[str] = {"thm6b_printed"}

_NAME_SETS: Dict[str, Set[str]] = {
    "sequence": VALID_SEQUENCES,
    "table kind": VALID_TABLE_KINDS,
    "format": VALID_FORMATS,
    "route": VALID_ROUTES,
    "kind": VALID_KINDS,
    "identity": VALID_IDENTITIES,
}


# deterministic Miller-Rabin witnesses for every n < 3.3e24
_MR_BASES: Tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_prime(p: int) -> None:
    """Raise InvalidParameter unless p is an odd prime."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or not is_prime(p):
        raise InvalidParameter(f"p must be an odd prime, got {p}")


def validate_order(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidParameter(f"order k must be a positive integer, got {k}")


def validate_nonnegative(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidParameter(f"{name} must be a nonnegative integer, got {value}")


def validate_name(kind: str, name: str) -> None:
    """
    Validate a name against the canonical set for ``kind``.

    Raises InvalidParameter with the closest valid name when there is one.
    """
    allowed = _NAME_SETS[kind]
    if name in allowed:
        return
    msg = f"Unknown {kind} '{name}'. Allowed: {', '.join(sorted(allowed))}"
    suggestion = difflib.get_close_matches(str(name), list(allowed), n=1)
    if suggestion:
        msg += f". Did you mean {suggestion[0]}?"
    raise InvalidParameter(msg)
