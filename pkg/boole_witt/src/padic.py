"""
Fixed-precision p-adic integers and truncated fermionic sums.

The fermionic integral of f is the limit of the alternating sums

    S_N(f) = sum_{y=0}^{p^N - 1} f(y) (-1)^y.

Here every value is carried modulo p^M. The k-fold sum of g(y1 + ... + yk)
is computed from the distribution of the sum s = y1 + ... + yk: the signed
alternating distribution on [0, p^N) convolved with itself k times, then
paired with g evaluated over s. numpy does the convolution and the
vectorised evaluation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

try:  # package import
    from .boole import BooleKind, BooleParams, boole_polys_gf
    from .config import term_budget
    from .errors import BudgetExceeded, DenominatorNotUnit, InvalidParameter
    from .polynomial import Poly, RationalLike, as_rational, falling_factorial_poly, poly_eval
    from .records import CongruenceReport
    from .validator import validate_nonnegative, validate_order, validate_prime
except ImportError:  # script import fallback
    from boole import BooleKind, BooleParams, boole_polys_gf  # type: ignore
    from config import term_budget  # type: ignore
    from errors import BudgetExceeded, DenominatorNotUnit, InvalidParameter  # type: ignore
    from polynomial import Poly, RationalLike, as_rational, falling_factorial_poly, poly_eval  # type: ignore
    from records import CongruenceReport  # type: ignore
    from validator import validate_nonnegative, validate_order, validate_prime  # type: ignore

__all__ = [
    "PadicContext",
    "PadicInt",
    "extended_gcd",
    "inverse_mod",
    "embed_rational",
    "fermionic_sum",
    "fermionic_sum_multi",
    "sum_cost",
    "witt_integrand",
    "witt_check",
]

logger = logging.getLogger(__name__)

# int64 products must stay below this
_INT64_SAFE = 2 ** 62


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def inverse_mod(a: int, m: int) -> int:
    """Inverse of a modulo m via extended Euclid; ValueError if none exists."""
    g, s, _ = extended_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {m}")
    return s % m


@dataclass(frozen=True)
class PadicContext:
    """Odd prime p and precision M: residues live in Z / p^M."""

    p: int
    precision_M: int

    def __post_init__(self):
        validate_prime(self.p)
        if not isinstance(self.precision_M, int) or self.precision_M < 1:
            raise InvalidParameter(f"precision M must be a positive integer, got {self.precision_M}")

    @property
    def modulus(self) -> int:
        return self.p ** self.precision_M

    def __call__(self, value: RationalLike) -> "PadicInt":
        return embed_rational(value, self)


@dataclass(frozen=True)
class PadicInt:
    ctx: PadicContext
    residue: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.ctx.modulus)

    def _other(self, other) -> "PadicInt":
        if isinstance(other, PadicInt):
            if other.ctx != self.ctx:
                raise ValueError(f"mixing contexts {self.ctx} and {other.ctx}")
            return other
        return embed_rational(other, self.ctx)

    def __add__(self, other) -> "PadicInt":
        return PadicInt(self.ctx, self.residue + self._other(other).residue)

    __radd__ = __add__

    def __neg__(self) -> "PadicInt":
        return PadicInt(self.ctx, -self.residue)

    def __sub__(self, other) -> "PadicInt":
        return PadicInt(self.ctx, self.residue - self._other(other).residue)

    def __rsub__(self, other) -> "PadicInt":
        return PadicInt(self.ctx, self._other(other).residue - self.residue)

    def __mul__(self, other) -> "PadicInt":
        return PadicInt(self.ctx, self.residue * self._other(other).residue)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return self.residue % self.ctx.p != 0

    def inverse(self) -> "PadicInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self.residue} is not a unit modulo {self.ctx.p}")
        return PadicInt(self.ctx, inverse_mod(self.residue, self.ctx.modulus))

    def __truediv__(self, other) -> "PadicInt":
        return self * self._other(other).inverse()

    def valuation(self) -> int:
        """p-adic valuation, capped at the precision M (a zero residue reports M)."""
        if self.residue == 0:
            return self.ctx.precision_M
        v, r = 0, self.residue
        while r % self.ctx.p == 0:
            r //= self.ctx.p
            v += 1
        return v

    def norm(self) -> Fraction:
        """|a|_p = p^(-v), normalised so that |p|_p = 1/p."""
        return Fraction(1, self.ctx.p ** self.valuation())

    def reduce(self, modulus: int) -> int:
        return self.residue % modulus

    def __int__(self) -> int:
        return self.residue


def embed_rational(a: RationalLike, ctx: PadicContext) -> PadicInt:
    """Image of a p-integral rational in Z / p^M."""
    a = as_rational(a)
    if a.denominator % ctx.p == 0:
        raise DenominatorNotUnit(a, ctx.p)
    q = ctx.modulus
    return PadicInt(ctx, a.numerator * inverse_mod(a.denominator, q))


def _dtype_for(q: int, length: int):
    """int64 when every product-sum stays in range, object (Python ints) otherwise."""
    if (q - 1) * (q - 1) * max(length, 1) < _INT64_SAFE:
        return np.int64
    return object


def sum_cost(p: int, N: int, k: int) -> int:
    """Term estimate of the k-fold sum: convolution work plus the final evaluation."""
    width = p ** N
    conv = sum(width * (j * (width - 1) + 1) for j in range(1, k))
    return conv + k * (width - 1) + 1


@lru_cache(maxsize=64)
def _signed_distribution(p: int, N: int, k: int, q: int) -> np.ndarray:
    """
    d[s] = (-1)^s * #{(y1..yk) in [0, p^N)^k : y1 + ... + yk = s}, mod q.
    """
    width = p ** N
    dtype = _dtype_for(q, width)
    base = np.array([1 if y % 2 == 0 else q - 1 for y in range(width)], dtype=dtype)
    dist = base
    for _ in range(k - 1):
        dist = np.convolve(dist, base) % q
    logger.debug("alternating distribution p=%d N=%d k=%d: %d points", p, N, k, len(dist))
    return dist


def _eval_mod(coeffs: Sequence[int], points: np.ndarray, q: int) -> np.ndarray:
    """Horner evaluation of an integer polynomial mod q at every point."""
    acc = np.zeros(len(points), dtype=points.dtype)
    for c in reversed(coeffs):
        acc = (acc * points + c) % q
    return acc


def fermionic_sum_multi(f: Poly, k: int, ctx: PadicContext, N: int, budget: Optional[int] = None) -> PadicInt:
    """
    sum over (y1..yk) in [0, p^N)^k of f(y1 + ... + yk) (-1)^(y1 + ... + yk), mod p^M.

    f is a polynomial in the sum variable s; its coefficients must be p-integral.
    """
    validate_order(k)
    if not isinstance(N, int) or N < 1:
        raise InvalidParameter(f"level N must be a positive integer, got {N}")
    budget = term_budget() if budget is None else budget
    cost = sum_cost(ctx.p, N, k)
    if cost > budget:
        raise BudgetExceeded(cost, budget)

    q = ctx.modulus
    coeffs = [embed_rational(c, ctx).residue for c in f.coeffs]
    dist = _signed_distribution(ctx.p, N, k, q)
    dtype = _dtype_for(q, len(dist))
    points = np.arange(len(dist), dtype=np.int64) % q
    if dtype is object:
        points = points.astype(object)
        dist = dist.astype(object)
    values = _eval_mod(coeffs, points, q)
    total = int(((dist * values) % q).sum()) % q
    return PadicInt(ctx, total)


def fermionic_sum(f: Poly, ctx: PadicContext, N: int) -> PadicInt:
    """S_N(f) = sum_{y < p^N} f(y) (-1)^y, mod p^M."""
    return fermionic_sum_multi(f, 1, ctx, N)


def witt_integrand(kind: BooleKind | str, n: int, lam: RationalLike, x: RationalLike) -> Poly:
    """(x + lam*s)_n for the first kind, (x - lam*s)_n for the second, as a polynomial in s."""
    kind = BooleKind(kind)
    lam, x = as_rational(lam), as_rational(x)
    slope = lam if kind is BooleKind.FIRST else -lam
    return falling_factorial_poly(n).compose_linear(slope, x)


def witt_check(
    kind: BooleKind | str,
    k: int,
    n: int,
    lam: RationalLike,
    x: RationalLike,
    ctx: PadicContext,
    N: int,
    slack: int = 0,
    budget: Optional[int] = None,
) -> CongruenceReport:
    """
    Compare the level-N fermionic sum of the Witt integrand with 2^k times the
    closed-form Boole polynomial at x, modulo p^(N - slack).
    """
    kind = BooleKind(kind)
    validate_order(k)
    validate_nonnegative("n", n)
    validate_nonnegative("slack", slack)
    lam, x = as_rational(lam), as_rational(x)
    if ctx.precision_M < N:
        raise InvalidParameter(f"precision M={ctx.precision_M} must be at least N={N}")

    lhs = fermionic_sum_multi(witt_integrand(kind, n, lam, x), k, ctx, N, budget=budget)
    seq = boole_polys_gf(BooleParams(lam, kind, k), n)
    rhs = embed_rational(poly_eval(seq.polys[n], x) * 2 ** k, ctx)

    modulus = ctx.p ** max(N - slack, 0)
    report = CongruenceReport(
        p=ctx.p, M=ctx.precision_M, N=N, n=n, k=k, kind=kind.value, lam=lam, x=x,
        lhs_residue=lhs.reduce(modulus), rhs_residue=rhs.reduce(modulus),
        modulus=modulus, agree=lhs.reduce(modulus) == rhs.reduce(modulus),
    )
    if not report.agree:
        logger.warning("witt congruence failed: %s", report.to_json())
    return report
