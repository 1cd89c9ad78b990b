"""
Boole polynomials of the first and second kind, of any order k, and the
Changhee polynomials.

Generating functions (u = (1+t)^lambda):

    first kind   sum Bl_n^{(k)}(x|lambda) t^n/n!  = (1/(1+u))^k   (1+t)^x
    second kind  sum B^l_n^{(k)}(x|lambda) t^n/n! = (u/(1+u))^k   (1+t)^x
    Changhee     sum Ch_n(x) t^n/n!               = 2/(t+2)       (1+t)^x

Two routes produce the same polynomials and are kept side by side:
- ``boole_polys_gf``: coefficient extraction from the generating function.
- ``boole_polys_euler``: the Stirling/Euler expansion
      2^k Bl_n^{(k)}(x|lambda)  = sum_l S1(n,l) lambda^l E_l^{(k)}(x/lambda)
      2^k B^l_n^{(k)}(x|lambda) = sum_l S1(n,l) (-lambda)^l E_l^{(k)}(-x/lambda)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Tuple

try:  # package import
    from .errors import IndexOutOfRange, ZeroLambda
    from .euler import euler_polys
    from .polynomial import Poly, RationalLike, as_rational, poly_eval, rational_to_str
    from .powerseries import Series, binomial_series, binomial_series_symbolic, series_inv
    from .stirling import stirling1
except ImportError:  # script import fallback
    from errors import IndexOutOfRange, ZeroLambda  # type: ignore
    from euler import euler_polys  # type: ignore
    from polynomial import Poly, RationalLike, as_rational, poly_eval, rational_to_str  # type: ignore
    from powerseries import Series, binomial_series, binomial_series_symbolic, series_inv  # type: ignore
    from stirling import stirling1  # type: ignore

__all__ = [
    "BooleKind",
    "BooleParams",
    "BooleSequence",
    "boole_gf",
    "boole_polys_gf",
    "boole_polys_euler",
    "boole_polys",
    "boole_value",
    "boole_numbers",
    "changhee_poly",
    "changhee_polys",
]

logger = logging.getLogger(__name__)


class BooleKind(str, Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class BooleParams:
    lam: Fraction
    kind: BooleKind = BooleKind.FIRST
    order_k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        object.__setattr__(self, "kind", BooleKind(self.kind))
        if self.order_k < 1:
            raise ValueError(f"order k must be >= 1, got {self.order_k}")


@dataclass(frozen=True)
class BooleSequence:
    params: BooleParams
    max_n: int
    polys: Tuple[Poly, ...]

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.params.kind.value,
            "lambda": rational_to_str(self.params.lam),
            "order_k": self.params.order_k,
            "polys": [p.to_json() for p in self.polys],
        }


def boole_gf(params: BooleParams, T: int) -> Series:
    """The t-only factor of the generating function, without (1+t)^x."""
    u = binomial_series(params.lam, T)
    inv = series_inv(u + Series.one(T))
    base = inv if params.kind is BooleKind.FIRST else u * inv
    return base ** params.order_k


@lru_cache(maxsize=256)
def boole_polys_gf(params: BooleParams, max_n: int) -> BooleSequence:
    """Bl_n^{(k)}(x|lambda) (or the second kind) for n <= max_n by gf extraction."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    logger.debug("boole gf route: %s up to n=%d", params, max_n)
    gf = boole_gf(params, max_n).lift() * binomial_series_symbolic(max_n)
    return BooleSequence(params=params, max_n=max_n, polys=tuple(gf.egf_coefficients()))


@lru_cache(maxsize=256)
def boole_polys_euler(params: BooleParams, max_n: int) -> BooleSequence:
    """Same sequence through the Stirling numbers of the first kind and E_l^{(k)}."""
    if params.lam == 0:
        raise ZeroLambda()
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    k, lam = params.order_k, params.lam
    euler = euler_polys(k, max_n)
    scale = Fraction(1, 2 ** k)
    if params.kind is BooleKind.FIRST:
        # lambda^l E_l(x/lambda)
        terms = [euler[l].scale_arg(1 / lam) * lam ** l for l in range(max_n + 1)]
    else:
        # (-lambda)^l E_l(-x/lambda)
        terms = [euler[l].scale_arg(-1 / lam) * (-lam) ** l for l in range(max_n + 1)]
    polys: List[Poly] = []
    for n in range(max_n + 1):
        acc = Poly()
        for l in range(n + 1):
            s1 = stirling1(n, l)
            if s1:
                acc = acc + terms[l] * s1
        polys.append(acc * scale)
    return BooleSequence(params=params, max_n=max_n, polys=tuple(polys))


def boole_polys(params: BooleParams, max_n: int, route: str = "gf") -> BooleSequence:
    """Dispatch on route name: "gf" or "euler"."""
    if route == "gf":
        return boole_polys_gf(params, max_n)
    if route == "euler":
        return boole_polys_euler(params, max_n)
    raise ValueError(f"unknown route {route!r}; expected 'gf' or 'euler'")


def boole_value(seq: BooleSequence, n: int, a: RationalLike) -> Fraction:
    if n < 0 or n > seq.max_n:
        raise IndexOutOfRange(f"index {n} outside computed range 0..{seq.max_n}", n=n)
    return poly_eval(seq.polys[n], a)


def boole_numbers(params: BooleParams, max_n: int) -> List[Fraction]:
    """Boole numbers (values at x = 0) of either kind."""
    return [p.constant_term() for p in boole_polys_gf(params, max_n).polys]


def changhee_polys(max_n: int, route: str = "boole") -> List[Poly]:
    """
    Ch_0(x) .. Ch_max_n(x).

    route="boole" doubles Bl_n(x|1); route="direct" expands 2/(t+2) (1+t)^x.
    """
    if route == "boole":
        seq = boole_polys_gf(BooleParams(Fraction(1)), max_n)
        return [p * 2 for p in seq.polys]
    if route == "direct":
        half_t = Series((Fraction(1), Fraction(1, 2)), max_n)
        gf = series_inv(half_t).lift() * binomial_series_symbolic(max_n)
        return gf.egf_coefficients()
    raise ValueError(f"unknown route {route!r}; expected 'boole' or 'direct'")


def changhee_poly(n: int) -> Poly:
    """Ch_n(x) = 2 Bl_n(x|1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return changhee_polys(n)[n]
