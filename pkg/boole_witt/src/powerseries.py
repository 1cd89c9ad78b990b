"""
Truncated formal power series in t.

A ``Series`` keeps coefficients of t^0..t^T (T = ``order``) over one of two
coefficient rings: exact rationals, or polynomials in x (``Poly``). Binary
operations need equal rings and truncate to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Sequence, Tuple, Union

try:  # package import
    from .errors import NonUnitConstantTerm, NonzeroInnerConstant, RingMismatch
    from .polynomial import Poly, RationalLike, as_rational, binomial_general, falling_factorial_poly, rational_to_str
except ImportError:  # script import fallback
    from errors import NonUnitConstantTerm, NonzeroInnerConstant, RingMismatch  # type: ignore
    from polynomial import Poly, RationalLike, as_rational, binomial_general, falling_factorial_poly, rational_to_str  # type: ignore

__all__ = [
    "Ring",
    "Series",
    "series_mul",
    "series_inv",
    "series_compose",
    "binomial_series",
    "binomial_series_symbolic",
    "exp_minus_one",
    "exp_series",
    "exp_xt_symbolic",
]

Coeff = Union[Fraction, Poly]


class Ring(str, Enum):
    RATIONAL = "rational"
    POLY = "poly"

    def zero(self) -> Coeff:
        return Fraction(0) if self is Ring.RATIONAL else Poly()

    def one(self) -> Coeff:
        return Fraction(1) if self is Ring.RATIONAL else Poly.constant(1)

    def coerce(self, value: Any) -> Coeff:
        if self is Ring.POLY:
            return value if isinstance(value, Poly) else Poly.constant(value)
        if isinstance(value, Poly):
            raise RingMismatch("polynomial coefficient in a rational series")
        return as_rational(value)


@dataclass(frozen=True)
class Series:
    """Truncated power series sum_{m=0}^{order} coeffs[m] t^m."""

    coeffs: Tuple[Coeff, ...]
    order: int
    ring: Ring = Ring.RATIONAL

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        padded = [self.ring.coerce(c) for c in list(self.coeffs)[: self.order + 1]]
        padded.extend(self.ring.zero() for _ in range(self.order + 1 - len(padded)))
        object.__setattr__(self, "coeffs", tuple(padded))

    # --- constructors ---

    @classmethod
    def constant(cls, c: Any, order: int, ring: Ring = Ring.RATIONAL) -> "Series":
        return cls((c,), order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = Ring.RATIONAL) -> "Series":
        return cls((ring.one(),), order, ring)

    @classmethod
    def t(cls, order: int, ring: Ring = Ring.RATIONAL) -> "Series":
        return cls((ring.zero(), ring.one()), order, ring)

    # --- access ---

    def coefficient(self, m: int) -> Coeff:
        return self.coeffs[m] if 0 <= m <= self.order else self.ring.zero()

    def constant_term(self) -> Coeff:
        return self.coeffs[0]

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order), self.ring)

    def lift(self) -> "Series":
        """View a rational series as a series over Poly (constant polynomials)."""
        if self.ring is Ring.POLY:
            return self
        return Series(tuple(Poly.constant(c) for c in self.coeffs), self.order, Ring.POLY)

    def egf_coefficients(self) -> List[Coeff]:
        """n! * [t^n] for n = 0..order (the sequence this series generates exponentially)."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    # --- arithmetic ---

    def _check(self, other: "Series") -> int:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if self.ring is not other.ring:
            raise RingMismatch(f"cannot combine {self.ring.value} and {other.ring.value} series")
        return min(self.order, other.order)

    def __add__(self, other: "Series") -> "Series":
        T = self._check(other)
        return Series(tuple(self.coeffs[m] + other.coeffs[m] for m in range(T + 1)), T, self.ring)

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs), self.order, self.ring)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: Union["Series", RationalLike, Poly]) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        scalar = self.ring.coerce(other)
        return Series(tuple(c * scalar for c in self.coeffs), self.order, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return series_inv(self) ** (-k)
        result = Series.one(self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            k >>= 1
        return result

    def derivative(self) -> "Series":
        """d/dt; the top coefficient is lost, so the order drops by one (floored at 0)."""
        coeffs = tuple(m * self.coeffs[m] for m in range(1, self.order + 1))
        return Series(coeffs, max(self.order - 1, 0), self.ring)

    # --- serialisation ---

    def to_json(self) -> Dict[str, Any]:
        if self.ring is Ring.RATIONAL:
            coeffs: List[Any] = [rational_to_str(c) for c in self.coeffs]
        else:
            coeffs = [c.to_json() for c in self.coeffs]
        return {"order": self.order, "ring": self.ring.value, "coeffs": coeffs}


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to min(order(a), order(b))."""
    T = a._check(b)
    zero = a.ring.zero()
    out = []
    for m in range(T + 1):
        acc = zero
        for i in range(m + 1):
            acc = acc + a.coeffs[i] * b.coeffs[m - i]
        out.append(acc)
    return Series(tuple(out), T, a.ring)


def _unit_inverse(c: Coeff) -> Fraction:
    if isinstance(c, Poly):
        if c.is_zero() or not c.is_constant():
            raise NonUnitConstantTerm(f"constant term {c} is not a nonzero constant polynomial")
        return 1 / c.constant_term()
    if c == 0:
        raise NonUnitConstantTerm("constant term is zero")
    return 1 / c


def series_inv(a: Series) -> Series:
    """Multiplicative inverse: b with a*b = 1 up to the truncation order."""
    inv0 = _unit_inverse(a.coeffs[0])
    b: List[Coeff] = [a.ring.one() * inv0]
    for m in range(1, a.order + 1):
        acc = a.ring.zero()
        for j in range(1, m + 1):
            acc = acc + a.coeffs[j] * b[m - j]
        b.append(-acc * inv0)
    return Series(tuple(b), a.order, a.ring)


def series_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(t)), Horner accumulation; inner must have zero constant term."""
    T = outer._check(inner)
    c0 = inner.coeffs[0]
    nonzero = not c0.is_zero() if isinstance(c0, Poly) else c0 != 0
    if nonzero:
        raise NonzeroInnerConstant(f"inner series has constant term {c0}")
    inner = inner.truncate(T)
    result = Series.constant(outer.coeffs[T], T, outer.ring)
    for m in range(T - 1, -1, -1):
        result = series_mul(result, inner) + Series.constant(outer.coeffs[m], T, outer.ring)
    return result


def binomial_series(lam: RationalLike, T: int) -> Series:
    """(1+t)^lam = sum binomial_general(lam, m) t^m."""
    return Series(tuple(binomial_general(lam, m) for m in range(T + 1)), T)


def binomial_series_symbolic(T: int) -> Series:
    """(1+t)^x over Poly: the t^m coefficient is binom(x, m) = (x)_m / m!."""
    return Series(tuple(falling_factorial_poly(m) / factorial(m) for m in range(T + 1)), T, Ring.POLY)


def exp_series(c: RationalLike, T: int) -> Series:
    """e^{ct}."""
    c = as_rational(c)
    return Series(tuple(c ** m / factorial(m) for m in range(T + 1)), T)


def exp_minus_one(T: int) -> Series:
    """e^t - 1, the substitution series of the Stirling transform."""
    return Series((Fraction(0),) + tuple(Fraction(1, factorial(l)) for l in range(1, T + 1)), T)


def exp_xt_symbolic(T: int) -> Series:
    """e^{xt} over Poly: the t^m coefficient is x^m / m!."""
    return Series(tuple(Poly.monomial(m, Fraction(1, factorial(m))) for m in range(T + 1)), T, Ring.POLY)
