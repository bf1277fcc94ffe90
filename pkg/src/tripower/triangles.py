"""Integer triangle families and their row-level identities.

The central object is the coefficient u(n, k) = 6nk - 6k^2 + 1. It is a
polynomial, so it is defined for ALL integer pairs; the usual bounds
0 <= k <= n matter only when rendering rows. Row sums over k = 0..n-1
give n^3 exactly, which is what every expansion strategy in
:mod:`tripower.expand` ultimately leans on.

Also here: the plateau triangles v_M(n, k) (boundary 1, interior
1 + n + ... + n^M), Pascal and its 2^k-scaled variant, the triangle
r(n, k) = nk - k^2 + 1 recovered from u via u = 6r - 5, two reduced
triangles, and the coefficient quadruple (a0, b0, a1, b1) satisfying
a*x - b = x^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exactmath import binomial, int_pow


def u_coeff(n: int, k: int) -> int:
    """6nk - 6k^2 + 1, for any integers n, k."""
    return 6 * n * k - 6 * k * k + 1


def rascal_coeff(n: int, k: int) -> int:
    """(u_coeff + 5) / 6; equals nk - k^2 + 1, derived rather than assumed."""
    num = u_coeff(n, k) + 5
    q, r = divmod(num, 6)
    if r:  # cannot happen: 6nk - 6k^2 + 6 is divisible by 6
        raise AssertionError(f"u_coeff({n},{k}) + 5 not divisible by 6")
    return q


def v_coeff(m: int, n: int, k: int) -> int:
    """Plateau triangle entry: 1 on the row boundary, else sum_{i=0}^{m} n^i.

    m is the plateau order (>= 0), n the row, k the column with 0 <= k <= n.
    """
    if m < 0:
        raise ValueError(f"v_coeff requires m >= 0, got m={m}")
    if n < 0:
        raise ValueError(f"v_coeff requires n >= 0, got n={n}")
    if k < 0 or k > n:
        raise ValueError(f"v_coeff: k={k} outside [0, {n}]")
    if k == 0 or k == n:
        return 1
    return sum(int_pow(n, i) for i in range(m + 1))


@dataclass(frozen=True)
class TriangleKind:
    """A triangle family tag; v triangles carry their plateau order m."""

    tag: str
    m: int | None = None

    def __str__(self) -> str:
        if self.tag == "v":
            return f"v{self.m}"
        return self.tag


U_TRIANGLE = TriangleKind("u")
PASCAL = TriangleKind("pascal")
RASCAL = TriangleKind("rascal")
SCALED_PASCAL_2K = TriangleKind("scaled-pascal")
REDUCED_1 = TriangleKind("reduced1")
REDUCED_2 = TriangleKind("reduced2")
ONES = TriangleKind("ones")


def v_triangle(m: int) -> TriangleKind:
    if m < 0:
        raise ValueError(f"v triangle order must be >= 0, got {m}")
    return TriangleKind("v", m)


_FIXED_KINDS = {
    "u": U_TRIANGLE,
    "pascal": PASCAL,
    "rascal": RASCAL,
    "scaled-pascal": SCALED_PASCAL_2K,
    "reduced1": REDUCED_1,
    "reduced2": REDUCED_2,
    "ones": ONES,
}


def parse_kind(text: str) -> TriangleKind:
    """Parse a kind name as used by the CLI: u, pascal, ..., v0, v1, v2, ..."""
    name = text.strip().lower()
    if name in _FIXED_KINDS:
        return _FIXED_KINDS[name]
    if name.startswith("v") and name[1:].isdigit():
        return v_triangle(int(name[1:]))
    known = ", ".join(sorted(_FIXED_KINDS) + ["v<M>"])
    raise ValueError(f"unknown triangle kind {text!r} (known: {known})")


def _entry(kind: TriangleKind, n: int, k: int) -> int:
    if kind.tag == "u":
        return u_coeff(n, k)
    if kind.tag == "pascal":
        return binomial(n, k)
    if kind.tag == "rascal":
        return rascal_coeff(n, k)
    if kind.tag == "scaled-pascal":
        return binomial(n, k) * int_pow(2, k)
    if kind.tag == "v":
        return v_coeff(kind.m, n, k)
    if kind.tag == "reduced1":
        # boundary stays 1 even where the interior formula would agree
        return 1 if k in (0, n) else u_coeff(n, k) - n * n
    if kind.tag == "reduced2":
        return 1 if k in (0, n) else u_coeff(n, k) - n * n - n
    if kind.tag == "ones":
        return 1
    raise ValueError(f"unknown triangle kind tag {kind.tag!r}")


@dataclass(frozen=True)
class TriangleRow:
    kind: TriangleKind
    n: int
    entries: tuple[int, ...]


def triangle_row(kind: TriangleKind, n: int) -> TriangleRow:
    """Row n (length n + 1) of the given triangle family."""
    if n < 0:
        raise ValueError(f"triangle_row requires n >= 0, got n={n}")
    entries = tuple(_entry(kind, n, k) for k in range(n + 1))
    return TriangleRow(kind=kind, n=n, entries=entries)


class RowRange(Enum):
    """Which slice of row n to sum: k=0..n-1, k=0..n, or k=1..n."""

    EXCL_LAST = "excl-last"
    INCL_LAST = "incl-last"
    EXCL_FIRST = "excl-first"


def row_sum_u(n: int, rng: RowRange) -> int:
    """Sum of u_coeff over the requested slice of row n, by literal summation.

    EXCL_LAST and EXCL_FIRST total n^3; INCL_LAST totals n^3 + 1.
    """
    if n < 0:
        raise ValueError(f"row_sum_u requires n >= 0, got n={n}")
    if rng is RowRange.EXCL_LAST:
        ks = range(0, n)
    elif rng is RowRange.INCL_LAST:
        ks = range(0, n + 1)
    elif rng is RowRange.EXCL_FIRST:
        ks = range(1, n + 1)
    else:
        raise ValueError(f"unknown row range {rng!r}")
    return sum(u_coeff(n, k) for k in ks)


@dataclass(frozen=True)
class ABCoefficients:
    """Quadruple with a0*x - b0 = x^3 and a1*x - b1 = x^3."""

    x: int
    a0: int
    b0: int
    a1: int
    b1: int


def ab_coefficients(x: int) -> ABCoefficients:
    """Closed forms a0 = 3x^2-3x, b0 = 2x^3-3x^2, a1 = 3x^2+3x, b1 = 2x^3+3x^2."""
    if x < 1:
        raise ValueError(f"ab_coefficients requires x >= 1, got x={x}")
    a0 = 3 * x * x - 3 * x
    b0 = 2 * x ** 3 - 3 * x * x
    a1 = 3 * x * x + 3 * x
    b1 = 2 * x ** 3 + 3 * x * x
    assert a0 * x - b0 == x ** 3 and a1 * x - b1 == x ** 3
    return ABCoefficients(x=x, a0=a0, b0=b0, a1=a1, b1=b1)


def central_polygonal_pointer(n: int) -> int:
    """u_coeff((n^2+n+2)/2, 1), which equals the cube gap (n+1)^3 - n^3."""
    if n < 0:
        raise ValueError(f"central_polygonal_pointer requires n >= 0, got n={n}")
    idx, r = divmod(n * n + n + 2, 2)
    assert r == 0  # n^2 + n is always even
    value = u_coeff(idx, 1)
    assert value == int_pow(n + 1, 3) - int_pow(n, 3)
    return value


class IterationSet(Enum):
    """Index sets over which the cube sums run: {1..x}, {0..x}, {0..x-1}."""

    A = "A"
    B = "B"
    C = "C"


class SumForm(Enum):
    T_FORM = "t"  # sum of 6mx - 6m^2 + 1 over the set
    U_FORM = "u"  # x + 6 * sum of (mx - m^2) over the set


def _iteration_indices(x: int, s: IterationSet) -> range:
    if s is IterationSet.A:
        return range(1, x + 1)
    if s is IterationSet.B:
        return range(0, x + 1)
    return range(0, x)


def iteration_set_sum(x: int, s: IterationSet, form: SumForm) -> int:
    """Evaluate the cube x^3 as a sum over one of three index sets.

    The T form admits sets A and C only (set B has x+1 terms, each
    contributing its trailing +1, which overshoots). The U form admits
    all three because the m=0 term vanishes inside the scaled sum.
    """
    if x < 1:
        raise ValueError(f"iteration_set_sum requires x >= 1, got x={x}")
    if form is SumForm.T_FORM:
        if s is IterationSet.B:
            raise ValueError("T form does not admit set B (0..x)")
        return sum(6 * m * x - 6 * m * m + 1 for m in _iteration_indices(x, s))
    if form is SumForm.U_FORM:
        return x + 6 * sum(m * x - m * m for m in _iteration_indices(x, s))
    raise ValueError(f"unknown sum form {form!r}")


def render_triangle_text(kind: TriangleKind, rows: int) -> str:
    """Centered text rendering, one row per line."""
    lines = [
        " ".join(str(e) for e in triangle_row(kind, n).entries)
        for n in range(rows + 1)
    ]
    width = max(len(line) for line in lines)
    return "\n".join(line.center(width).rstrip() for line in lines)


def render_triangle_csv(kind: TriangleKind, rows: int) -> str:
    """One row per line, entries as comma-separated decimal strings."""
    return "\n".join(
        ",".join(str(e) for e in triangle_row(kind, n).entries)
        for n in range(rows + 1)
    )


def triangle_rows_json(kind: TriangleKind, rows: int) -> dict:
    """JSON-ready dict; entries as decimal strings so no consumer overflows."""
    return {
        "kind": str(kind),
        "rows": rows,
        "entries": [
            [str(e) for e in triangle_row(kind, n).entries]
            for n in range(rows + 1)
        ],
    }
