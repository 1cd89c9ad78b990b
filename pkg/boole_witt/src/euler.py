"""
Euler polynomials of order k from the generating function

    (2 / (e^t + 1))^k e^{xt} = sum_n E_n^{(k)}(x) t^n / n!

and the exact fermionic integral of polynomials built on them: the measure
has moments I(y^n) = E_n = E_n^{(1)}(0), so I(f) for a polynomial f is a
finite rational combination of Euler numbers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

try:  # package import
    from .polynomial import Poly, RationalLike, poly_eval
    from .powerseries import Series, exp_series, exp_xt_symbolic, series_inv
except ImportError:  # script import fallback
    from polynomial import Poly, RationalLike, poly_eval  # type: ignore
    from powerseries import Series, exp_series, exp_xt_symbolic, series_inv  # type: ignore

__all__ = [
    "EulerSequence",
    "euler_gf",
    "euler_polys",
    "euler_value",
    "euler_numbers",
    "fermionic_moment",
    "integrate_poly",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerSequence:
    """polys[n] = E_n^{(k)}(x) for n = 0..max_n."""

    order_k: int
    max_n: int
    polys: Tuple[Poly, ...]

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def to_json(self) -> List[List[str]]:
        return [p.to_json() for p in self.polys]


def euler_gf(k: int, T: int) -> Series:
    """(2 / (e^t + 1))^k as a rational series of order T."""
    if k < 1:
        raise ValueError(f"order k must be >= 1, got {k}")
    half_sum = (exp_series(1, T) + Series.one(T)) * Fraction(1, 2)
    return series_inv(half_sum) ** k


# k -> longest sequence computed so far
_CACHE: Dict[int, EulerSequence] = {}


def euler_polys(k: int, max_n: int) -> EulerSequence:
    """E_0^{(k)}(x) .. E_max_n^{(k)}(x), cached per order."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    cached = _CACHE.get(k)
    if cached is None or cached.max_n < max_n:
        T = max(max_n, 2 * cached.max_n if cached else 12)
        logger.debug("computing Euler polynomials of order %d up to n=%d", k, T)
        gf = euler_gf(k, T).lift() * exp_xt_symbolic(T)
        cached = EulerSequence(order_k=k, max_n=T, polys=tuple(gf.egf_coefficients()))
        _CACHE[k] = cached
    if cached.max_n == max_n:
        return cached
    return EulerSequence(order_k=k, max_n=max_n, polys=cached.polys[: max_n + 1])


def euler_value(n: int, k: int, a: RationalLike) -> Fraction:
    """E_n^{(k)}(a)."""
    return poly_eval(euler_polys(k, n).polys[n], a)


def euler_numbers(k: int, max_n: int) -> List[Fraction]:
    """E_n^{(k)} = E_n^{(k)}(0) for n = 0..max_n."""
    return [p.constant_term() for p in euler_polys(k, max_n).polys]


def fermionic_moment(n: int) -> Fraction:
    """Exact value of the fermionic integral of y^n, i.e. E_n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return euler_value(n, 1, 0)


def integrate_poly(f: Poly) -> Fraction:
    """I(f) = sum a_i E_i for f = sum a_i y^i."""
    if f.is_zero():
        return Fraction(0)
    moments = euler_numbers(1, f.degree)
    return sum((a * moments[i] for i, a in enumerate(f.coeffs)), Fraction(0))
