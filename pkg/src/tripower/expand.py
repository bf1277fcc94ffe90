"""Interchangeable strategies that each rebuild x^n as an explicit sum.

Every strategy returns the exact summand list in iteration order plus
the total, and the total is asserted equal to direct exponentiation.
Strategies in the u family multiply row coefficients u(x, k) by
x^(n-3); for n < 3 those powers are exact rationals and only the total
is guaranteed integral.

Strategy tags (CLI spelling):
  v-row              row k of the plateau triangle, k = 0..x-1
  telescope-geom     1 + sum of x^(k+1) - x^k, k = 0..n-1
  u-row              sum of u(x,k) * x^(n-3), k = 0..x-1
  u-recurrence-n     the same with u(x,k) replaced by (u(x+1,k)+u(x-1,k))/2
  u-reflect          the same with (u(2x-k,k)+u(2x-k,0))/2
  u-central          sum of u((k^2+k+2)/2, 1) * x^(n-3), k = 0..x-1
  gen-binomial:j[:p] sum of (-1)^k C(j,k) a^(j-k) b^k x^(n-2j-k), k = 0..j,
                     with (a, b) the pair-p cubic coefficients (p = 0 or 1)
  double-binomial    sum over k,j of C(n,k) C(k,j) (-1)^(k-j) x^j
  binomial-diff-sum  0^n plus sum over i,k of C(n,k) i^(n-k)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import binomial, int_pow, rat_pow
from .findiff import gsum
from .triangles import ab_coefficients, u_coeff


@dataclass(frozen=True)
class StrategyId:
    tag: str
    j: int | None = None  # recursion depth, gen-binomial only
    pair: int = 0  # coefficient pair index, gen-binomial only

    def __str__(self) -> str:
        if self.tag == "gen-binomial":
            if self.pair:
                return f"gen-binomial:{self.j}:{self.pair}"
            return f"gen-binomial:{self.j}"
        return self.tag


V_ROW = StrategyId("v-row")
TELESCOPE_GEOM = StrategyId("telescope-geom")
U_ROW = StrategyId("u-row")
U_RECURRENCE_N = StrategyId("u-recurrence-n")
U_REFLECT = StrategyId("u-reflect")
U_CENTRAL = StrategyId("u-central")
DOUBLE_BINOMIAL = StrategyId("double-binomial")
BINOMIAL_DIFF_SUM = StrategyId("binomial-diff-sum")


def gen_binomial(j: int, pair: int = 0) -> StrategyId:
    if j < 1:
        raise ValueError(f"gen-binomial depth must be >= 1, got {j}")
    if pair not in (0, 1):
        raise ValueError(f"gen-binomial pair must be 0 or 1, got {pair}")
    return StrategyId("gen-binomial", j, pair)


#: the eight depth-free strategies of the agreement suite
BASIC_STRATEGIES = (
    V_ROW,
    TELESCOPE_GEOM,
    U_ROW,
    U_RECURRENCE_N,
    U_REFLECT,
    U_CENTRAL,
    DOUBLE_BINOMIAL,
    BINOMIAL_DIFF_SUM,
)

_FIXED_STRATEGIES = {str(s): s for s in BASIC_STRATEGIES}


def parse_strategy(text: str) -> StrategyId:
    """Parse a CLI strategy spelling; gen-binomial takes optional :depth[:pair]."""
    name = text.strip().lower()
    if name in _FIXED_STRATEGIES:
        return _FIXED_STRATEGIES[name]
    if name == "gen-binomial":
        return gen_binomial(1)
    if name.startswith("gen-binomial:"):
        rest = name.split(":")[1:]
        if len(rest) > 2 or not all(part.isdigit() for part in rest):
            raise ValueError(f"bad gen-binomial suffix {text!r}")
        depth = int(rest[0])
        pair = int(rest[1]) if len(rest) == 2 else 0
        if depth < 1:
            raise ValueError(f"bad gen-binomial depth {rest[0]!r}")
        if pair not in (0, 1):
            raise ValueError(f"bad gen-binomial pair {rest[1]!r}")
        return gen_binomial(depth, pair)
    known = sorted(_FIXED_STRATEGIES) + ["gen-binomial[:depth[:pair]]"]
    raise ValueError(f"unknown strategy {text!r} (known: {', '.join(known)})")


@dataclass(frozen=True)
class ExpansionResult:
    x: int
    n: int
    strategy: StrategyId
    value: int
    terms: tuple


def _xpow(x: int, e: int):
    """x^e as int for e >= 0, exact Fraction for e < 0."""
    if e >= 0:
        return int_pow(x, e)
    return rat_pow(Fraction(x), e)


def _require_positive_x(x: int, strategy: StrategyId) -> None:
    if x < 1:
        raise ValueError(f"strategy {strategy} requires x >= 1, got x={x}")


def _half(a: int) -> int:
    q, r = divmod(a, 2)
    if r:
        raise AssertionError(f"odd coefficient pair sum {a}")
    return q


def _terms_for(x: int, n: int, strategy: StrategyId) -> list:
    tag = strategy.tag
    if tag == "v-row":
        if x < 0:
            raise ValueError(f"v-row requires x >= 0, got x={x}")
        if x == 0 and n == 0:
            raise ValueError("v-row cannot represent 0^0: the row sum is empty")
        # interior entries of the plateau row all equal gsum(x, n)
        return [1 if k == 0 else gsum(x, n) for k in range(x)]
    if tag == "telescope-geom":
        if x < 0:
            raise ValueError(f"telescope-geom requires x >= 0, got x={x}")
        return [1] + [int_pow(x, k + 1) - int_pow(x, k) for k in range(n)]
    if tag == "u-row":
        _require_positive_x(x, strategy)
        p = _xpow(x, n - 3)
        return [u_coeff(x, k) * p for k in range(x)]
    if tag == "u-recurrence-n":
        _require_positive_x(x, strategy)
        p = _xpow(x, n - 3)
        return [_half(u_coeff(x + 1, k) + u_coeff(x - 1, k)) * p for k in range(x)]
    if tag == "u-reflect":
        _require_positive_x(x, strategy)
        p = _xpow(x, n - 3)
        return [
            _half(u_coeff(2 * x - k, k) + u_coeff(2 * x - k, 0)) * p
            for k in range(x)
        ]
    if tag == "u-central":
        _require_positive_x(x, strategy)
        p = _xpow(x, n - 3)
        return [u_coeff((k * k + k + 2) // 2, 1) * p for k in range(x)]
    if tag == "gen-binomial":
        _require_positive_x(x, strategy)
        j = strategy.j
        ab = ab_coefficients(x)
        a, b = (ab.a1, ab.b1) if strategy.pair else (ab.a0, ab.b0)
        return [
            (-1) ** k * binomial(j, k) * int_pow(a, j - k) * int_pow(b, k)
            * _xpow(x, n - 2 * j - k)
            for k in range(j + 1)
        ]
    if tag == "double-binomial":
        if x < 0:
            raise ValueError(f"double-binomial requires x >= 0, got x={x}")
        return [
            binomial(n, k) * binomial(k, j) * (-1) ** (k - j) * int_pow(x, j)
            for k in range(n + 1)
            for j in range(k + 1)
        ]
    if tag == "binomial-diff-sum":
        if x < 0:
            raise ValueError(f"binomial-diff-sum requires x >= 0, got x={x}")
        # leading term is the telescoping base f(0) = 0^n
        return [int_pow(0, n)] + [
            binomial(n, k) * int_pow(i, n - k)
            for i in range(x)
            for k in range(1, n + 1)
        ]
    raise ValueError(f"unknown strategy {strategy}")


def expand_power(x: int, n: int, strategy: StrategyId) -> ExpansionResult:
    """Rebuild x^n by the chosen strategy; total asserted against int_pow."""
    if n < 0:
        raise ValueError(f"expand_power requires n >= 0, got n={n}")
    terms = _terms_for(x, n, strategy)
    total = sum(terms, start=Fraction(0))
    if total.denominator != 1:
        raise AssertionError(f"non-integral total {total} for {strategy} at ({x},{n})")
    value = int(total)
    assert value == int_pow(x, n)
    return ExpansionResult(x=x, n=n, strategy=strategy, value=value, terms=tuple(terms))


def double_binomial_k_groups(x: int, n: int) -> list:
    """The double-binomial summands grouped by outer index k (n+1 partials)."""
    return [
        sum(binomial(n, k) * binomial(k, j) * (-1) ** (k - j) * int_pow(x, j)
            for j in range(k + 1))
        for k in range(n + 1)
    ]


@dataclass(frozen=True)
class BinomialPairExpansion:
    """(x+y)^n as 1 + (x+y-1) * gsum(x+y, n), with the regrouped sub-totals.

    The product splits into x-weighted, y-weighted and unit parts:
    1 + x*g + y*g - g where g = gsum(x+y, n).
    """

    x: int
    y: int
    n: int
    value: int
    x_total: int
    y_total: int
    unit_total: int


def expand_binomial_pair(x: int, y: int, n: int) -> BinomialPairExpansion:
    if n < 0:
        raise ValueError(f"expand_binomial_pair requires n >= 0, got n={n}")
    s = x + y
    if s < 1:
        raise ValueError(f"expand_binomial_pair requires x + y >= 1, got {s}")
    g = gsum(s, n)
    value = 1 + (s - 1) * g
    assert value == int_pow(s, n)
    assert 1 + x * g + y * g - g == value
    return BinomialPairExpansion(
        x=x, y=y, n=n, value=value,
        x_total=x * g, y_total=y * g, unit_total=g,
    )


def expand_multinomial(xs: list, n: int) -> int:
    """(x1 + ... + xm)^n as 1 + (s-1) * gsum(s, n) with s the total."""
    if n < 0:
        raise ValueError(f"expand_multinomial requires n >= 0, got n={n}")
    s = sum(xs)
    if s < 1:
        raise ValueError(f"expand_multinomial requires a positive total, got {s}")
    value = 1 + (s - 1) * gsum(s, n)
    assert value == int_pow(s, n)
    return value


def geom_ratio_identity(x: int, n: int) -> Fraction:
    """(x^n - 1)/(x - 1), asserted equal to gsum(x, n)."""
    if x < 2:
        raise ValueError(f"geom_ratio_identity requires x >= 2, got x={x}")
    if n < 1:
        raise ValueError(f"geom_ratio_identity requires n >= 1, got n={n}")
    q = Fraction(int_pow(x, n) - 1, x - 1)
    assert q == gsum(x, n)
    return q
