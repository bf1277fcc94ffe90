"""Exact rational partial sums of e^x with rigorous tail bounds.

Each power x^n inside the sum is produced by a power-expansion strategy
(and asserted against direct exponentiation), so the series machinery
doubles as an end-to-end exercise of the strategy layer. The tail bound

    sum_{n>N} x^n/n!  <=  (x^(N+1)/(N+1)!) * (N+2)/(N+2-x)

holds whenever N+2 > x (each factorial ratio beyond N+1 is at most
x/(N+2), so the tail is dominated by a geometric series). For small N
the terms up to max(N, x-1) are summed exactly first, which keeps the
bound valid for every N >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactmath import int_pow
from .expand import StrategyId, TELESCOPE_GEOM, expand_power
from .findiff import gsum
from .triangles import u_coeff


def tail_bound(x: int, n_terms: int) -> Fraction:
    """Exact rational upper bound on sum_{n > n_terms} x^n / n!."""
    if x < 0:
        raise ValueError(f"tail_bound requires x >= 0, got x={x}")
    if n_terms < 0:
        raise ValueError(f"tail_bound requires N >= 0, got {n_terms}")
    if x == 0:
        return Fraction(0)
    m = max(n_terms, x - 1)  # ensures m + 2 > x
    head = sum(
        (Fraction(int_pow(x, n), factorial(n)) for n in range(n_terms + 1, m + 1)),
        start=Fraction(0),
    )
    geo = Fraction(int_pow(x, m + 1), factorial(m + 1)) * Fraction(m + 2, m + 2 - x)
    return head + geo


@dataclass(frozen=True)
class ExpPartial:
    x: int
    terms_used: int
    strategy: StrategyId
    value: Fraction
    tail_bound: Fraction


def exp_partial(x: int, n_terms: int, strategy: StrategyId = TELESCOPE_GEOM) -> ExpPartial:
    """sum_{n=0}^{N} x^n/n!, each power built by `strategy`."""
    if x < 0:
        raise ValueError(f"exp_partial requires x >= 0, got x={x}")
    if n_terms < 0:
        raise ValueError(f"exp_partial requires N >= 0, got {n_terms}")
    if x == 0:
        # only the n=0 term contributes; strategies are never consulted
        value = Fraction(1)
    else:
        value = sum(
            (Fraction(expand_power(x, n, strategy).value, factorial(n))
             for n in range(n_terms + 1)),
            start=Fraction(0),
        )
    return ExpPartial(
        x=x, terms_used=n_terms, strategy=strategy,
        value=value, tail_bound=tail_bound(x, n_terms),
    )


def claim_inner_term(x: int, n: int) -> int:
    """The claimed row expansion of x^n - 1 for one series term.

    For n >= 3 this is sum_{m=1}^{x-1} u(x,m) * x^(n-3) plus the
    geometric tail x^(n-4) + ... + x + 1. The n < 3 terms fall outside
    that form (negative powers with no defined meaning), so the direct
    value x^n - 1 is substituted for them.
    """
    if x < 2:
        raise ValueError(f"claim_inner_term requires x >= 2, got x={x}")
    if n < 0:
        raise ValueError(f"claim_inner_term requires n >= 0, got n={n}")
    if n < 3:
        return int_pow(x, n) - 1
    row = sum(u_coeff(x, m) for m in range(1, x))
    return row * int_pow(x, n - 3) + gsum(x, n - 3)


def exp_minus_e_partial(x: int, n_terms: int) -> Fraction:
    """Partial sum of the claimed series for e^x - e: sum claim_inner_term(x,n)/n!.

    The true partial sum is sum (x^n - 1)/n!; the two agree exactly at
    x = 2 and drift apart for x >= 3 (the audit registry quantifies the
    drift). The n = 0 term vanishes either way, so outer sums starting
    at 0 and at 1 coincide.
    """
    if x < 2:
        raise ValueError(f"exp_minus_e_partial requires x >= 2, got x={x}")
    if n_terms < 3:
        raise ValueError(f"exp_minus_e_partial requires N >= 3, got {n_terms}")
    return sum(
        (Fraction(claim_inner_term(x, n), factorial(n)) for n in range(n_terms + 1)),
        start=Fraction(0),
    )


def exp_convergence_report(x: int, decimal_digits: int) -> int:
    """Smallest N with tail_bound(x, N) < 10^-decimal_digits, by exact iteration."""
    if decimal_digits < 1:
        raise ValueError(f"decimal_digits must be >= 1, got {decimal_digits}")
    target = Fraction(1, 10 ** decimal_digits)
    n = 0
    while tail_bound(x, n) >= target:
        n += 1
    return n
