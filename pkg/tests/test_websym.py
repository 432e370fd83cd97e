from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl3jones.qexact import RationalQ, SixthPowerLaurent as L, quantum_binom, quantum_int
from sl3jones.websym import (
    bubble_coeff,
    clasp_expansion_coeff,
    delta,
    full_twist_coeffs,
    iter_chains,
    sixj,
    sixj_table,
    tet,
    theta,
    theta_alternating,
    twist_eigenvalue,
)

one = L.monomial(0)


def q(*coeffs, shift=0):
    return L.from_q_coeffs(list(coeffs), shift)


def at_one(r: RationalQ) -> Fraction:
    return Fraction(r.numerator.at_one(), r.denominator.at_one())


class TestDelta:
    def test_values(self):
        assert delta(0, 0) == one
        assert delta(1, 0) == quantum_int(3)
        assert delta(1, 1) == q(1, 2, 2, 2, 1, shift=-2)

    def test_symmetric(self):
        assert delta(3, 1) == delta(1, 3)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            delta(-1, 0)

    @given(st.integers(0, 10), st.integers(0, 10))
    def test_classical_dimension(self, i, j):
        # dimension of the irreducible sl3 module with highest weight (i, j)
        assert delta(i, j).at_one() == (i + 1) * (j + 1) * (i + j + 2) // 2


class TestTheta:
    def test_i_zero_is_delta(self):
        for n in range(6):
            assert theta(n, 0) == RationalQ(delta(n, 0))

    def test_one_one(self):
        assert theta(1, 1) == RationalQ(delta(1, 1))

    def test_two_one(self):
        expected = RationalQ(quantum_binom(5, 4) * delta(1, 1), quantum_binom(2, 1) ** 2)
        assert theta(2, 1) == expected

    def test_not_always_laurent(self):
        assert not theta(3, 1).is_laurent()

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            theta(1, 2)

    def test_two_forms_agree(self):
        for n in range(9):
            for i in range(n + 1):
                assert theta(n, i) == theta_alternating(n, i), (n, i)

    def test_positive_at_one(self):
        for n in range(9):
            for i in range(n + 1):
                assert at_one(theta(n, i)) > 0
                assert delta(n, i).at_one() > 0


class TestTet:
    def test_boundary(self):
        for n in range(9):
            for j in range(n + 1):
                assert tet(n, 0, j) == theta(n, j)

    def test_small_values(self):
        assert tet(1, 1, 0) == RationalQ(delta(1, 1))
        assert tet(1, 1, 1) == -theta(1, 1) / RationalQ(quantum_int(3))


class TestSixJ:
    def test_first_row(self):
        for n in range(5):
            for j in range(n + 1):
                assert sixj(n, 0, j) == RationalQ(delta(j, j)) / theta(n, j)

    def test_small(self):
        assert sixj(1, 0, 1) == RationalQ(one)
        assert sixj(1, 1, 1) == -RationalQ(one, quantum_int(3))

    def test_orthogonality(self):
        for n in range(7):
            m = sixj_table(n).matrix()
            for i in range(n + 1):
                for k in range(n + 1):
                    s = RationalQ(0)
                    for j in range(n + 1):
                        s = s + m[i][j] * m[j][k]
                    assert s == RationalQ(1 if i == k else 0), (n, i, k)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            sixj(2, 3, 0)


class TestTwist:
    def test_values(self):
        assert twist_eigenvalue(1, 0) == L.monomial(-16)
        assert twist_eigenvalue(1, 1) == L.monomial(2)

    @given(st.integers(0, 15))
    def test_diagonal(self, n):
        assert twist_eigenvalue(n, n) == L.monomial(2 * n * n)

    @given(st.integers(0, 15).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
    def test_monomial_in_thirds(self, ni):
        t = twist_eigenvalue(*ni)
        assert t.is_monomial() and t.min_exp % 2 == 0


class TestClaspAndBubble:
    def test_clasp_coeffs(self):
        assert clasp_expansion_coeff(3, 2, 0) == RationalQ(one)
        assert clasp_expansion_coeff(1, 1, 1) == -RationalQ(one, quantum_int(3))
        assert clasp_expansion_coeff(2, 1, 1) == -RationalQ(quantum_int(2), quantum_int(4))
        with pytest.raises(ValueError):
            clasp_expansion_coeff(1, 1, 2)

    def test_bubble(self):
        assert bubble_coeff(2, 3, 0, 0, 0) == RationalQ(one)
        assert bubble_coeff(1, 1, 1, 1, 1) == RationalQ(quantum_int(3))
        assert bubble_coeff(1, 1, 1, 0, 1) == RationalQ(one)
        with pytest.raises(ValueError):
            bubble_coeff(1, 1, 1, 1, 0)


class TestFullTwist:
    def test_chains(self):
        assert list(iter_chains(1, 2)) == [(1, 1), (1, 0), (0, 0)] or \
            sorted(iter_chains(1, 2)) == [(0, 0), (1, 0), (1, 1)]
        assert len(list(iter_chains(3, 2))) == 10

    def test_n1_m1(self):
        f = full_twist_coeffs(1, 1)
        assert f.coeffs == {0: q(0, 1, -1), 1: q(0, 0, 0, 1)}
        assert f.prefactor == L.monomial(-16)

    def test_trivial_color(self):
        assert full_twist_coeffs(0, 4).coeffs == {0: one}

    def test_n1_m2_bruteforce(self):
        # chains (0,0), (1,0), (1,1)
        f = full_twist_coeffs(1, 2)
        assert f.coeffs[0] == q(0, 1, -1) + q(0, 0, 0, 0, 1, -1)
        assert f.coeffs[1] == L.monomial(36)


def test_debug_mode_cross_checks_theta(monkeypatch):
    import sl3jones.websym as ws
    monkeypatch.setattr(ws, "DEBUG", True)
    ws.theta.cache_clear()
    try:
        for n in range(5):
            for i in range(n + 1):
                ws.theta(n, i)
    finally:
        ws.theta.cache_clear()
