"""Forward differences, telescoping sums, geometric sums."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tripower.findiff import (
    binomial_diff,
    difference_table,
    forward_diff_seq,
    gsum,
    hex_footnote_check,
    telescope_power,
    v_first_diff,
)

# difference table of x^3 for x in [0,10]: the value column and D1..D3
CUBE_TABLE = [
    [0, 1, 8, 27, 64, 125, 216, 343, 512, 729, 1000],
    [1, 7, 19, 37, 61, 91, 127, 169, 217, 271],
    [6, 12, 18, 24, 30, 36, 42, 48, 54],
    [6, 6, 6, 6, 6, 6, 6, 6],
]


def diff_oracle(values, order, i):
    """sum_{j} (-1)^(order-j) C(order,j) f(i+j), the direct alternating form."""
    return sum(
        (-1) ** (order - j) * math.comb(order, j) * values[i + j]
        for j in range(order + 1)
    )


class TestForwardDiffSeq:
    @given(
        st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=2, max_size=30),
        st.integers(1, 6),
    )
    def test_matches_alternating_oracle(self, values, order):
        if order >= len(values):
            order = len(values) - 1
        out = forward_diff_seq(values, order)
        assert len(out) == len(values) - order
        for i, got in enumerate(out):
            assert got == diff_oracle(values, order, i)

    def test_order_must_fit(self):
        with pytest.raises(ValueError):
            forward_diff_seq([1, 2], 2)
        with pytest.raises(ValueError):
            forward_diff_seq([1, 2, 3], 0)


class TestDifferenceTable:
    def test_cube_table_frozen(self):
        table = difference_table(3, 10, 3)
        assert [list(col) for col in table.columns] == CUBE_TABLE

    def test_cell_accessor(self):
        table = difference_table(3, 10, 3)
        assert table.cell(0, 1) == 1
        assert table.cell(4, 2) == 30
        assert table.cell(7, 3) == 6

    @pytest.mark.parametrize("n", range(1, 7))
    def test_top_difference_is_factorial(self, n):
        table = difference_table(n, n + 4, n)
        assert set(table.columns[n]) == {math.factorial(n)}

    def test_render_text(self):
        out = difference_table(3, 4, 2).render_text()
        lines = out.splitlines()
        assert lines[0].split() == ["x", "x^3", "D1", "D2"]
        assert lines[1].split() == ["0", "0", "1", "6"]
        assert lines[-1].split() == ["4", "64"]

    def test_render_csv(self):
        out = difference_table(2, 3, 1).render_csv()
        assert out.splitlines()[0] == "x,x^2,D1"
        assert out.splitlines()[1] == "0,0,1"
        assert out.splitlines()[-1] == "3,9,"

    def test_depth_bounds(self):
        with pytest.raises(ValueError):
            difference_table(3, 2, 3)
        with pytest.raises(ValueError):
            difference_table(0, 5, 1)


class TestBinomialDiff:
    @given(
        st.integers(-10, 10),
        st.integers(1, 8),
        st.fractions(min_value=-4, max_value=4),
    )
    def test_matches_direct_difference(self, x, n, h):
        got = binomial_diff(x, n, h)
        assert got == Fraction(x + h) ** n - Fraction(x) ** n

    def test_returns_fraction(self):
        assert isinstance(binomial_diff(2, 3, 1), Fraction)


class TestTelescopePower:
    def test_terms_are_gap_values(self):
        t = telescope_power(4, 3)
        assert t.value == 64
        assert list(t.terms) == [1, 7, 19, 37]

    @given(st.integers(0, 100), st.integers(1, 8))
    def test_value(self, x, n):
        assert telescope_power(x, n).value == x ** n

    def test_zero_base(self):
        t = telescope_power(0, 5)
        assert t.value == 0 and t.terms == ()


class TestGsum:
    @given(st.integers(2, 60), st.integers(0, 15))
    def test_closed_form(self, x, n):
        assert gsum(x, n) == (x ** n - 1) // (x - 1)

    @given(st.integers(0, 20))
    def test_base_one(self, n):
        assert gsum(1, n) == n

    def test_empty_sum(self):
        assert gsum(7, 0) == 0
        assert gsum(0, 3) == 1  # 0^0 + 0 + 0

    def test_fraction_in_fraction_out(self):
        got = gsum(Fraction(1, 2), 3)
        assert isinstance(got, Fraction) and got == Fraction(7, 4)

    def test_int_stays_int(self):
        assert isinstance(gsum(3, 4), int)


class TestVFirstDiff:
    def test_worked_value(self):
        # 4^3 - 3^3 computed through the row route
        assert v_first_diff(3, 3) == 37

    @given(st.integers(1, 80), st.integers(1, 9))
    def test_equals_power_gap(self, x, n):
        assert v_first_diff(x, n) == (x + 1) ** n - x ** n


class TestHexFootnote:
    def test_frozen(self):
        assert hex_footnote_check(0) == 1
        assert hex_footnote_check(4) == 61

    @given(st.integers(0, 300))
    def test_equals_cube_gap(self, n):
        assert hex_footnote_check(n) == (n + 1) ** 3 - n ** 3
