"""Forward-difference calculus over exact values.

Difference tables of x^n (column d is the d-th forward difference at
step 1), the binomial expansion of (x+h)^n - x^n, telescoping
reconstruction of x^n from its first difference, the geometric sum
gsum(x, n) = 1 + x + ... + x^(n-1), and the first difference of x^n
computed through gsum. Every operation cross-checks itself against a
directly computed value and returns exact ints or Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import binomial, int_pow, rat_pow


def forward_diff_seq(values: list, order: int) -> list:
    """The order-th iterated forward difference; length shrinks by `order`."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order >= len(values):
        raise ValueError(
            f"order {order} needs at least {order + 1} values, got {len(values)}"
        )
    out = list(values)
    for _ in range(order):
        out = [out[i + 1] - out[i] for i in range(len(out) - 1)]
    return out


@dataclass(frozen=True)
class DifferenceTable:
    """Columns of iterated differences of f(x) = x^n sampled at x = 0..x_max.

    columns[0] is f itself (length x_max + 1); columns[d] has length
    x_max + 1 - d. For f = x^n, column n is the constant n! and any
    later column is identically zero.
    """

    n: int
    x_max: int
    depth: int
    columns: tuple[tuple[int, ...], ...]

    def cell(self, x: int, d: int) -> int:
        return self.columns[d][x]

    def render_text(self) -> str:
        headers = ["x", f"x^{self.n}"] + [f"D{d}" for d in range(1, self.depth + 1)]
        rows = []
        for x in range(self.x_max + 1):
            cells = [str(x)]
            for d in range(self.depth + 1):
                cells.append(str(self.columns[d][x]) if x < len(self.columns[d]) else "")
            rows.append(cells)
        widths = [
            max(len(r[c]) for r in rows + [headers])
            for c in range(len(headers))
        ]
        lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths)).rstrip()]
        for r in rows:
            lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(lines)

    def render_csv(self) -> str:
        headers = ["x", f"x^{self.n}"] + [f"D{d}" for d in range(1, self.depth + 1)]
        lines = [",".join(headers)]
        for x in range(self.x_max + 1):
            cells = [str(x)]
            for d in range(self.depth + 1):
                cells.append(str(self.columns[d][x]) if x < len(self.columns[d]) else "")
            lines.append(",".join(cells))
        return "\n".join(lines)


def difference_table(n: int, x_max: int, depth: int) -> DifferenceTable:
    if n < 1:
        raise ValueError(f"difference_table requires n >= 1, got n={n}")
    if depth < 1:
        raise ValueError(f"difference_table requires depth >= 1, got depth={depth}")
    if depth > x_max:
        raise ValueError(f"depth {depth} exceeds x_max {x_max}")
    columns = [[int_pow(x, n) for x in range(x_max + 1)]]
    for _ in range(depth):
        prev = columns[-1]
        columns.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return DifferenceTable(
        n=n, x_max=x_max, depth=depth,
        columns=tuple(tuple(col) for col in columns),
    )


def binomial_diff(x: Fraction | int, n: int, h: Fraction | int) -> Fraction:
    """sum_{k=1}^{n} C(n,k) x^(n-k) h^k, asserted equal to (x+h)^n - x^n."""
    if n < 1:
        raise ValueError(f"binomial_diff requires n >= 1, got n={n}")
    xq, hq = Fraction(x), Fraction(h)
    total = sum(
        (binomial(n, k) * rat_pow(xq, n - k) * rat_pow(hq, k) for k in range(1, n + 1)),
        start=Fraction(0),
    )
    direct = rat_pow(xq + hq, n) - rat_pow(xq, n)
    assert total == direct
    return total


@dataclass(frozen=True)
class TelescopeSum:
    """x^n rebuilt as the sum of consecutive first differences."""

    x: int
    n: int
    value: int
    terms: tuple[int, ...]  # terms[k] = (k+1)^n - k^n


def telescope_power(x: int, n: int) -> TelescopeSum:
    if x < 0:
        raise ValueError(f"telescope_power requires x >= 0, got x={x}")
    if n < 1:
        raise ValueError(f"telescope_power requires n >= 1, got n={n}")
    terms = tuple(int_pow(k + 1, n) - int_pow(k, n) for k in range(x))
    return TelescopeSum(x=x, n=n, value=sum(terms), terms=terms)


def gsum(x, n: int):
    """Geometric sum x^0 + x^1 + ... + x^(n-1); empty (0) when n = 0.

    Returns an int for int input, a Fraction for Fraction input.
    """
    if n < 0:
        raise ValueError(f"gsum requires n >= 0, got n={n}")
    total = 0 if isinstance(x, int) else Fraction(0)
    power = 1 if isinstance(x, int) else Fraction(1)
    for _ in range(n):
        total += power
        power *= x
    return total


def v_first_diff(x: int, n: int) -> int:
    """(x+1)^n - x^n computed as x*(gsum(x+1,n) - gsum(x,n)) + gsum(x,n)."""
    if x < 1:
        raise ValueError(f"v_first_diff requires x >= 1, got x={x}")
    if n < 1:
        raise ValueError(f"v_first_diff requires n >= 1, got n={n}")
    value = x * (gsum(x + 1, n) - gsum(x, n)) + gsum(x, n)
    assert value == int_pow(x + 1, n) - int_pow(x, n)
    return value


def hex_footnote_check(n: int) -> int:
    """1 + sum_{j=0}^{n} 6j, asserted equal to the cube gap (n+1)^3 - n^3."""
    if n < 0:
        raise ValueError(f"hex_footnote_check requires n >= 0, got n={n}")
    value = 1 + sum(6 * j for j in range(n + 1))
    assert value == int_pow(n + 1, 3) - int_pow(n, 3)
    return value
