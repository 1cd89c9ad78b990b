"""
Exact rationals and dense univariate polynomials over the rationals.

Rational values are plain ``fractions.Fraction`` objects: always reduced,
denominator positive, equality structural. ``Poly`` stores coefficients
lowest degree first; the zero polynomial is the empty tuple.

Public helpers:
- binomial_general(r, m)
- falling_factorial_poly(n), rising_factorial_poly(n)
- poly_shift(p, c), poly_eval(p, r)
- rational_to_str(r)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational as _RationalABC
from typing import Iterable, List, Optional, Sequence, Tuple, Union

__all__ = [
    "Poly",
    "RationalLike",
    "as_rational",
    "rational_to_str",
    "binomial_general",
    "falling_factorial_poly",
    "rising_factorial_poly",
    "poly_shift",
    "poly_eval",
]

RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, _RationalABC):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


def rational_to_str(value: RationalLike) -> str:
    """Serialise as "a/b" in lowest terms, or "a" for integers."""
    r = as_rational(value)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def _normalize(coeffs: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    out = [as_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """
    Dense polynomial in x with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of x**i. Trailing zeros are stripped on
    construction, so two equal polynomials always compare equal.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # --- constructors ---

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "Poly":
        return cls((0,) * power + (coeff,))

    # --- inspection ---

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    # --- ring operations ---

    def __add__(self, other: Union["Poly", RationalLike]) -> "Poly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly(res)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Union["Poly", RationalLike]) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: RationalLike) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if not isinstance(other, Poly):
            s = as_rational(other)
            return Poly(c * s for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                res[i + j] += a * b
        return Poly(res)

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> "Poly":
        s = as_rational(scalar)
        return Poly(c / s for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- calculus and substitution ---

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def scale_arg(self, c: RationalLike) -> "Poly":
        """Return p(c*x)."""
        c = as_rational(c)
        return Poly(a * c ** i for i, a in enumerate(self.coeffs))

    def compose_linear(self, a: RationalLike, b: RationalLike) -> "Poly":
        """Return p(a*x + b)."""
        return poly_shift(self, b).scale_arg(a) if a != 0 else Poly.constant(poly_eval(self, b))

    def __call__(self, r: RationalLike) -> Fraction:
        return poly_eval(self, r)

    # --- serialisation ---

    def to_json(self) -> List[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        # local import: rational_parser sits above this module
        try:
            from .rational_parser import parse_rational
        except ImportError:
            from rational_parser import parse_rational  # type: ignore

        return cls(parse_rational(s) for s in data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = rational_to_str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{rational_to_str(mag)}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(value: Union[Poly, RationalLike]) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def binomial_general(r: RationalLike, m: int) -> Fraction:
    """r(r-1)...(r-m+1)/m! for any rational r; 1 when m == 0."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    r = as_rational(r)
    num = Fraction(1)
    for i in range(m):
        num *= r - i
    return num / factorial(m)


@lru_cache(maxsize=None)
def falling_factorial_poly(n: int) -> Poly:
    """(x)_n = x(x-1)...(x-n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = Poly.constant(1)
    for i in range(n):
        p = p * Poly((-i, 1))
    return p


@lru_cache(maxsize=None)
def rising_factorial_poly(n: int) -> Poly:
    """x^(n) = x(x+1)...(x+n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = Poly.constant(1)
    for i in range(n):
        p = p * Poly((i, 1))
    return p


def poly_shift(p: Poly, c: RationalLike) -> Poly:
    """Return q with q(x) = p(x + c), by Horner in the polynomial ring."""
    c = as_rational(c)
    if c == 0:
        return p
    step = Poly((c, 1))
    result = Poly()
    for a in reversed(p.coeffs):
        result = result * step + a
    return result


def poly_eval(p: Poly, r: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    r = as_rational(r)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * r + a
    return acc
