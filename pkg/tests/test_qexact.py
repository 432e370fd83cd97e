from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl3jones.qexact import (
    NotDivisibleError,
    RationalQ,
    SixthPowerLaurent as L,
    TruncatedSeries,
    laurent_exact_div,
    pentagonal_euler,
    q_binom,
    q_multinom,
    q_pochhammer,
    quantum_binom,
    quantum_int,
    to_series,
)

u = L.monomial(1)
Q = L.monomial(6)
one = L.monomial(0)


def q(*coeffs, shift=0):
    return L.from_q_coeffs(list(coeffs), shift)


laurents = st.dictionaries(st.integers(-30, 30), st.integers(-5, 5), max_size=6).map(L)


class TestLaurent:
    def test_identity(self):
        p = q(1, -2, 3, shift=-1)
        assert one * p == p

    def test_difference_of_squares(self):
        assert (u**3 + u**-3) * (u**3 - u**-3) == u**6 - u**-6

    def test_quantum_int_product(self):
        expected = L({9: 1, 3: 2, -3: 2, -9: 1})
        assert quantum_int(2) * quantum_int(3) == expected

    def test_zero_terms_dropped(self):
        assert L({3: 0, 0: 1}) == one
        assert L({2: 1}) - L({2: 1}) == L()
        assert L().is_zero()

    def test_negative_power_of_monomial(self):
        assert L.monomial(4, 1) ** -2 == L.monomial(-8)
        assert L.monomial(4, -1) ** -1 == L.monomial(-4, -1)

    def test_negative_power_of_non_unit_rejected(self):
        with pytest.raises((NotDivisibleError, ValueError, ZeroDivisionError)):
            (one + Q) ** -1

    def test_bar(self):
        assert q(0, 1, 2).bar() == q(2, 1, shift=-2)

    def test_text(self):
        assert L.monomial(-16).to_text() == "q^(-8/3)"
        assert (Q + one).to_text() in ("q + 1", "1 + q")

    @given(laurents, laurents, laurents)
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a - a == L()

    @given(laurents, laurents)
    def test_exact_division_inverts_multiplication(self, a, b):
        if b.is_zero():
            return
        assert laurent_exact_div(a * b, b) == a

    @given(laurents, laurents)
    def test_at_one_is_a_ring_map(self, a, b):
        assert (a * b).at_one() == a.at_one() * b.at_one()


class TestExactDivision:
    def test_cancellation(self):
        assert laurent_exact_div(quantum_int(2) * quantum_int(3), quantum_int(2)) == quantum_int(3)

    def test_geometric(self):
        assert laurent_exact_div(Q**6 - one, Q - one) == q(1, 1, 1, 1, 1, 1)

    def test_remainder_raises(self):
        with pytest.raises(NotDivisibleError):
            laurent_exact_div(Q + one, Q - one)

    def test_division_by_zero(self):
        with pytest.raises((ZeroDivisionError, NotDivisibleError)):
            laurent_exact_div(one, L())


class TestQuantumNumbers:
    def test_quantum_int(self):
        assert quantum_int(0) == L()
        assert quantum_int(2) == u**3 + u**-3
        assert quantum_int(3) == Q + one + Q**-1

    def test_quantum_binom(self):
        assert quantum_binom(3, 0) == one
        assert quantum_binom(3, 1) == quantum_int(3)
        assert quantum_binom(4, 2) == q(1, 1, 2, 1, 1, shift=-2)

    def test_pochhammer(self):
        assert q_pochhammer(0) == one
        assert q_pochhammer(1) == q(1, -1)
        assert q_pochhammer(3) == q(1, -1, -1, 0, 1, 1, -1)

    def test_q_binom(self):
        assert q_binom(5, 0) == one
        assert q_binom(4, 2) == q(1, 1, 2, 1, 1)
        assert q_binom(2, 3) == L()

    def test_q_multinom(self):
        assert q_multinom(3, [1, 1, 1]) == q(1, 1) * q(1, 1, 1)
        with pytest.raises(ValueError):
            q_multinom(3, [1, 1])

    @given(st.integers(0, 12), st.integers(0, 12))
    def test_q_binom_at_one(self, n, k):
        from math import comb
        assert q_binom(n, k).at_one() == (comb(n, k) if k <= n else 0)


class TestRational:
    def test_normalizes(self):
        r = RationalQ(quantum_int(2) * quantum_int(3), quantum_int(2))
        assert r.is_laurent() and r.to_laurent() == quantum_int(3)

    def test_field_ops(self):
        a = RationalQ(one, quantum_int(3))
        b = RationalQ(quantum_int(2), quantum_int(4))
        assert (a + b) - b == a
        assert (a * b) / b == a
        assert (a / a) == RationalQ(one)

    def test_equality_is_value_equality(self):
        assert RationalQ(Q - one, Q**2 - one) == RationalQ(one, Q + one)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalQ(one, L())

    def test_to_laurent_fails_when_not_polynomial(self):
        with pytest.raises(NotDivisibleError):
            RationalQ(one, quantum_int(3)).to_laurent()


class TestSeries:
    def test_to_series(self):
        assert to_series(one, 5).coeffs == (1, 0, 0, 0, 0, 0)
        assert to_series(Q**3, 2).coeffs == (0, 0, 0)
        with pytest.raises(ValueError):
            to_series(L.monomial(2), 3)

    def test_pentagonal(self):
        assert pentagonal_euler(7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_pentagonal_matches_product(self):
        prod = to_series(q_pochhammer(30), 30)
        assert pentagonal_euler(30) == prod

    def test_div_one_minus(self):
        s = TruncatedSeries.one(6).div_one_minus(2)
        assert s.coeffs == (1, 0, 1, 0, 1, 0, 1)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=25),
           st.lists(st.integers(-9, 9), min_size=1, max_size=25), st.integers(0, 30))
    @settings(max_examples=60)
    def test_truncated_product_matches_full_product(self, a, b, order):
        full = to_series(L.from_q_coeffs(a) * L.from_q_coeffs(b), order)
        assert TruncatedSeries(a, order) * TruncatedSeries(b, order) == full
