"""Arithmetic primitives: binomials, exact powers, decimal truncation."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tripower.exactmath import (
    binomial,
    int_pow,
    parse_rat,
    rat_pow,
    rat_str,
    truncate_decimal,
)


class TestBinomial:
    def test_small_table(self):
        # oracle: factorial quotient, computed independently
        for n in range(12):
            for k in range(n + 1):
                want = math.factorial(n) // (math.factorial(k) * math.factorial(n - k))
                assert binomial(n, k) == want

    def test_out_of_range_is_zero(self):
        assert binomial(5, -1) == 0
        assert binomial(5, 6) == 0
        assert binomial(0, 1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(1, 80), st.integers(0, 80))
    def test_pascal_recurrence(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    @given(st.integers(0, 64))
    def test_row_sum(self, n):
        assert sum(binomial(n, k) for k in range(n + 1)) == 2 ** n


class TestIntPow:
    def test_zero_to_zero_is_one(self):
        assert int_pow(0, 0) == 1

    @given(st.integers(-30, 30), st.integers(0, 20))
    def test_matches_builtin(self, x, n):
        assert int_pow(x, n) == x ** n

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            int_pow(2, -1)


class TestRatPow:
    def test_negative_exponent(self):
        assert rat_pow(Fraction(2, 3), -2) == Fraction(9, 4)

    def test_zero_base_negative_exponent(self):
        with pytest.raises(ZeroDivisionError):
            rat_pow(Fraction(0), -1)

    @given(
        st.fractions(min_value=-8, max_value=8).filter(lambda q: q != 0),
        st.integers(-6, 6),
    )
    def test_inverse_relation(self, q, n):
        assert rat_pow(q, n) * rat_pow(q, -n) == 1

    def test_zero_to_zero(self):
        assert rat_pow(Fraction(0), 0) == 1


class TestTruncateDecimal:
    @pytest.mark.parametrize(
        "value,digits,text,direction",
        [
            (Fraction(1, 3), 5, "0.33333", "below"),
            (Fraction(-1, 3), 5, "-0.33333", "above"),
            (Fraction(5, 4), 2, "1.25", "exact"),
            (Fraction(1, 8), 3, "0.125", "exact"),
            (Fraction(2), 4, "2.0000", "exact"),
            (Fraction(-1, 3), 0, "0", "above"),  # never prints "-0"
            (Fraction(7, 2), 0, "3", "below"),
        ],
    )
    def test_frozen_cases(self, value, digits, text, direction):
        d = truncate_decimal(value, digits)
        assert (d.text, d.digits, d.direction) == (text, digits, direction)

    def test_negative_digits_rejected(self):
        with pytest.raises(ValueError):
            truncate_decimal(Fraction(1), -1)

    @given(
        st.integers(-10 ** 9, 10 ** 9),
        st.integers(1, 10 ** 6),
        st.integers(0, 12),
    )
    def test_direction_is_honest(self, num, den, digits):
        value = Fraction(num, den)
        d = truncate_decimal(value, digits)
        printed = Fraction(d.text)
        if d.direction == "exact":
            assert printed == value
        elif d.direction == "below":
            assert printed < value
        else:
            assert printed > value
        assert abs(value - printed) < Fraction(1, 10 ** digits)

    def test_str_is_text(self):
        assert str(truncate_decimal(Fraction(1, 3), 2)) == "0.33"


class TestRatStr:
    def test_integer_form(self):
        assert rat_str(7) == "7"
        assert rat_str(Fraction(14, 2)) == "7"

    def test_fraction_form(self):
        assert rat_str(Fraction(-3, 7)) == "-3/7"

    @given(st.integers(-10 ** 12, 10 ** 12), st.integers(1, 10 ** 9))
    def test_round_trip(self, num, den):
        q = Fraction(num, den)
        assert parse_rat(rat_str(q)) == q
