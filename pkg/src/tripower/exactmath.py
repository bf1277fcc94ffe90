"""Exact integer and rational arithmetic shared by every other module.

Integers are plain Python ints (arbitrary precision). Rationals are
fractions.Fraction, which the stdlib keeps in canonical form (positive
denominator, gcd 1). Nothing in this package touches floating point.

Conventions baked in here and relied on everywhere else:
  * 0**0 == 1 (empty product), matching Python's own int power.
  * binomial(n, k) == 0 outside 0 <= k <= n, so double sums can
    iterate rectangularly without edge guards. Negative n is an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def int_pow(x: int, n: int) -> int:
    """x**n for integer n >= 0, with 0**0 == 1."""
    if n < 0:
        raise ValueError(f"int_pow requires n >= 0, got n={n}")
    return x ** n


def rat_pow(x: Fraction | int, n: int) -> Fraction:
    """Exact rational power for any integer exponent.

    Zero base demands n >= 0 (0**0 == 1 as everywhere else).
    """
    base = Fraction(x)
    if n < 0 and base == 0:
        raise ZeroDivisionError("rat_pow: zero base with negative exponent")
    return base ** n


@dataclass(frozen=True)
class TruncatedDecimal:
    """A decimal rendering of an exact rational, truncated, never rounded.

    ``direction`` states how the printed value relates to the true one:
    "exact" (all digits shown), "below" (printed < true, positive values)
    or "above" (printed > true, negative values truncate toward zero).
    """

    text: str
    digits: int
    direction: str

    def __str__(self) -> str:
        return self.text


def truncate_decimal(value: Fraction | int, digits: int) -> TruncatedDecimal:
    """Render `value` with exactly `digits` fractional digits, truncated toward zero."""
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    q = Fraction(value)
    negative = q < 0
    a = -q if negative else q
    scale = 10 ** digits
    scaled, rem = divmod(a.numerator * scale, a.denominator)
    whole, frac = divmod(scaled, scale)
    if digits:
        text = f"{whole}.{str(frac).zfill(digits)}"
    else:
        text = str(whole)
    if negative and scaled > 0:
        text = "-" + text
    if rem == 0:
        direction = "exact"
    else:
        direction = "above" if negative else "below"
    return TruncatedDecimal(text=text, digits=digits, direction=direction)


def rat_str(value: Fraction | int) -> str:
    """Canonical decimal-string form: "a" for integers, "a/b" otherwise."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    """Inverse of rat_str (also accepts plain integer strings)."""
    return Fraction(text)
