"""Exponential partial sums with exact rational tail control."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tripower.expand import DOUBLE_BINOMIAL, TELESCOPE_GEOM, U_ROW, V_ROW
from tripower.expseries import (
    claim_inner_term,
    exp_convergence_report,
    exp_minus_e_partial,
    exp_partial,
    tail_bound,
)


def partial_oracle(x, N):
    return sum(Fraction(x ** n, math.factorial(n)) for n in range(N + 1))


class TestExpPartial:
    def test_small_frozen(self):
        assert exp_partial(1, 4).value == Fraction(65, 24)
        assert exp_partial(0, 9).value == 1

    @given(st.integers(0, 8), st.integers(0, 30))
    @settings(max_examples=60)
    def test_matches_oracle(self, x, N):
        assert exp_partial(x, N).value == partial_oracle(x, N)

    @pytest.mark.parametrize("s", [TELESCOPE_GEOM, V_ROW, U_ROW, DOUBLE_BINOMIAL])
    def test_strategies_identical(self, s):
        # same rational for every route, not merely close
        for x in range(1, 7):
            for N in (0, 1, 5, 13, 25):
                assert exp_partial(x, N, s).value == partial_oracle(x, N)

    def test_monotone_in_terms(self):
        # nonnegative x: adding terms never decreases the value
        for x in range(0, 7):
            prev = exp_partial(x, 0).value
            for N in range(1, 40):
                cur = exp_partial(x, N).value
                assert cur >= prev
                prev = cur

    def test_records_inputs(self):
        p = exp_partial(2, 6)
        assert (p.x, p.terms_used) == (2, 6)
        assert p.strategy == TELESCOPE_GEOM
        assert p.tail_bound == tail_bound(2, 6)

    def test_domain(self):
        with pytest.raises(ValueError):
            exp_partial(-1, 5)
        with pytest.raises(ValueError):
            exp_partial(2, -1)


class TestTailBound:
    def test_zero_argument(self):
        assert tail_bound(0, 4) == 0

    def test_covers_true_tail(self):
        # remaining-series mass up to 40 more terms never exceeds the bound
        for x in range(0, 7):
            for N in range(2 * x, 2 * x + 12):
                true_gap = exp_partial(x, N + 40).value - exp_partial(x, N).value
                assert tail_bound(x, N) >= true_gap, (x, N)

    def test_shrinks_with_terms(self):
        for x in range(1, 6):
            assert tail_bound(x, 30) < tail_bound(x, 20) < tail_bound(x, 2 * x)

    def test_exact_fraction(self):
        # x=1, N=4: (1/5!) * 6/5
        assert tail_bound(1, 4) == Fraction(1, 120) * Fraction(6, 5)


class TestConvergenceReport:
    def test_digit_targets(self):
        assert exp_convergence_report(1, 15) == 17

    def test_zero_is_immediate(self):
        assert exp_convergence_report(0, 12) == 0

    def test_returned_depth_is_minimal(self):
        for digits in (3, 9, 15):
            n = exp_convergence_report(2, digits)
            target = Fraction(1, 10 ** digits)
            assert tail_bound(2, n) < target
            assert n == 0 or tail_bound(2, n - 1) >= target

    def test_decimal_for_e(self):
        from tripower.exactmath import truncate_decimal

        n = exp_convergence_report(1, 15)
        value = exp_partial(1, n).value
        assert truncate_decimal(value, 15).text == "2.718281828459045"

    def test_domain(self):
        with pytest.raises(ValueError):
            exp_convergence_report(1, 0)


class TestClaimInnerTerm:
    def test_low_orders_match_geometric_form(self):
        for x in range(2, 8):
            for n in range(0, 3):
                assert claim_inner_term(x, n) == x ** n - 1

    def test_x_two_always_matches(self):
        for n in range(0, 20):
            assert claim_inner_term(2, n) == 2 ** n - 1

    def test_first_divergence(self):
        # x=3, n=4: the regrouped form loses 1
        assert claim_inner_term(3, 4) == 79
        assert 3 ** 4 - 1 == 80

    def test_domain(self):
        with pytest.raises(ValueError):
            claim_inner_term(1, 4)


class TestExpMinusEPartial:
    def test_x_two_equals_direct_sum(self):
        for N in range(3, 20):
            direct = sum(
                Fraction(2 ** n - 1, math.factorial(n)) for n in range(N + 1)
            )
            assert exp_minus_e_partial(2, N) == direct

    def test_x_three_differs_from_direct(self):
        N = 10
        direct = sum(
            Fraction(3 ** n - 1, math.factorial(n)) for n in range(N + 1)
        )
        assert exp_minus_e_partial(3, N) != direct

    def test_domain(self):
        with pytest.raises(ValueError):
            exp_minus_e_partial(2, 2)
