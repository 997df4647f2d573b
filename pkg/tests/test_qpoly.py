import itertools
import json
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from majdes.errors import DegreeExceedsWindow, NotDivisible, ZeroPolynomial
from majdes.qpoly import (
    ONE, ZERO, QPolynomial, add, exact_divide, gaussian, multiply, q_binomial,
    reverse_within, shape_report,
)


def P(terms):
    return QPolynomial.from_terms(terms)


def box_partitions_gf(M, N):
    """Oracle: count partitions with at most N parts, each at most M."""
    counts = {}
    for parts in itertools.combinations_with_replacement(range(M + 1), N):
        s = sum(parts)
        counts[s] = counts.get(s, 0) + 1
    return P(counts) if N else ONE


polys = st.builds(
    QPolynomial,
    st.integers(0, 6),
    st.lists(st.integers(-20, 20), max_size=7).map(tuple),
)
nonzero_polys = polys.filter(bool)


def test_normalization_strips_zeros():
    p = QPolynomial(2, (0, 0, 3, 0))
    assert p.min_degree == 4 and p.coeffs == (3,)
    assert QPolynomial(5, (0, 0)) == ZERO
    assert ZERO.coeffs == ()


def test_max_degree_invariant():
    p = P({4: 5, 5: 5, 6: 5})
    assert p.max_degree == p.min_degree + len(p.coeffs) - 1 == 6


class TestAdd:
    def test_additive_identity(self):
        assert add(P({2: 1, 3: 1}), ZERO) == P({2: 1, 3: 1})

    def test_doubling(self):
        assert add(P({0: 1, 1: 1}), P({0: 1, 1: 1})) == P({0: 2, 1: 2})

    def test_cancellation_gives_empty(self):
        out = add(P({4: 1}), P({4: -1}))
        assert out.coeffs == () and out.is_zero()


class TestMultiply:
    def test_square(self):
        assert multiply(P({0: 1, 1: 1}), P({0: 1, 1: 1})) == P({0: 1, 1: 2, 2: 1})

    def test_shifted_run(self):
        # five copies of this are the t^2 coefficient of the 321 distribution at n=5
        out = multiply(P({4: 1}), P({0: 1, 1: 1, 2: 1}))
        assert out == P({4: 1, 5: 1, 6: 1})
        assert out * 5 == P({4: 5, 5: 5, 6: 5})

    def test_by_zero(self):
        assert multiply(P({0: 3, 7: 1}), ZERO) == ZERO

    @given(nonzero_polys, nonzero_polys)
    def test_min_degree_adds(self, a, b):
        assert multiply(a, b).min_degree == a.min_degree + b.min_degree


class TestRingLaws:
    @given(polys, polys, polys)
    def test_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @given(polys, polys)
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(polys, polys, polys)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys, nonzero_polys)
    def test_divide_undoes_multiply(self, a, b):
        assert exact_divide(multiply(a, b), b) == a


class TestExactDivide:
    def test_simple(self):
        assert exact_divide(P({0: 1, 1: 1, 2: 1, 3: 1}), P({0: 1, 1: 1})) == P({0: 1, 2: 1})

    def test_two_row_numerator(self):
        # n=5, k=2, i=2: q^4 (1-q^2) [1,1]_q [3,1]_q / (1-q^2)
        num = QPolynomial.monomial(4) * (1 - QPolynomial.monomial(2)) * gaussian(1, 1) * gaussian(3, 1)
        assert exact_divide(num, 1 - QPolynomial.monomial(2)) == P({4: 1, 5: 1, 6: 1})

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_divide(P({0: 1, 2: 1}), P({0: 1, 1: 1}))

    def test_non_unit_leading_coefficient(self):
        assert exact_divide(P({0: 6, 1: 4}), P({0: 2})) == P({0: 3, 1: 2})
        with pytest.raises(NotDivisible):
            exact_divide(P({0: 3}), P({0: 2}))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(ONE, ZERO)


class TestQBinomial:
    def test_empty_box(self):
        assert q_binomial(3, 0) == ONE

    def test_one_by_two_box(self):
        assert q_binomial(2, 1) == box_partitions_gf(2, 1) == P({0: 1, 1: 1, 2: 1})

    def test_two_by_two_box(self):
        assert q_binomial(2, 2) == box_partitions_gf(2, 2) == P({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})

    @pytest.mark.parametrize("M,N", [(M, N) for M in range(6) for N in range(5)])
    def test_matches_partition_enumeration(self, M, N):
        assert q_binomial(M, N) == box_partitions_gf(M, N)

    def test_vanishing_convention(self):
        assert gaussian(2, 3) == ZERO
        assert gaussian(5, 0) == ONE
        assert gaussian(5, -1) == ZERO

    @pytest.mark.parametrize("M", range(13))
    def test_box_properties(self, M):
        for N in range(13):
            g = q_binomial(M, N)
            assert g == q_binomial(N, M)
            assert g.at_one() == comb(M + N, N)
            assert g.max_degree == M * N and g.coefficient(0) == 1
            r = shape_report(g)
            assert r.symmetric and r.unimodal


class TestShapeReport:
    def test_flat(self):
        r = shape_report(P({4: 5, 5: 5, 6: 5}))
        assert (r.symmetric, r.unimodal, r.center_times_two) == (True, True, 10)
        assert r.coefficient_sum == 15

    def test_132_dip(self):
        r = shape_report(P({3: 6, 4: 5, 5: 6, 6: 2, 7: 1}))
        assert not r.unimodal and not r.symmetric

    def test_monomial(self):
        r = shape_report(P({7: 1}))
        assert (r.symmetric, r.unimodal, r.center_times_two) == (True, True, 14)

    def test_plateau_then_fall_is_unimodal(self):
        assert shape_report(P({0: 1, 1: 3, 2: 3, 3: 2})).unimodal

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            shape_report(ZERO)


class TestReverseWithin:
    def test_example(self):
        p = P({1: 4, 2: 3, 3: 2, 4: 1})
        assert reverse_within(p, 10) == P({6: 1, 7: 2, 8: 3, 9: 4})

    def test_constant(self):
        assert reverse_within(ONE, 0) == ONE

    def test_window_too_small(self):
        with pytest.raises(DegreeExceedsWindow):
            reverse_within(P({5: 1}), 4)

    @given(polys, st.integers(0, 6))
    def test_involution(self, p, extra):
        J = max(p.max_degree, 0) + extra
        assert reverse_within(reverse_within(p, J), J) == p

    @given(nonzero_polys)
    def test_fixes_symmetric_about_center(self, p):
        sym = p + reverse_within(p, p.min_degree + p.max_degree)
        assert shape_report(sym).symmetric
        assert reverse_within(sym, sym.min_degree + sym.max_degree) == sym


class TestRendering:
    @pytest.mark.parametrize("terms,text", [
        ({4: 5, 5: 5, 6: 5}, "5*q^4 + 5*q^5 + 5*q^6"),
        ({1: 4, 2: 9}, "4*q + 9*q^2"),
        ({0: 1}, "1"),
        ({}, "0"),
        ({0: 1, 1: -1, 3: -2}, "1 - q - 2*q^3"),
        ({2: -1}, "-q^2"),
    ])
    def test_text(self, terms, text):
        assert P(terms).to_text() == text

    def test_json_shape(self):
        obj = P({4: 5, 5: 5, 6: 5}).to_json()
        assert obj == {"min_degree": 4, "coeffs": ["5", "5", "5"]}

    @given(polys)
    def test_json_roundtrip(self, p):
        assert QPolynomial.from_json(json.loads(json.dumps(p.to_json()))) == p

    @settings(max_examples=20)
    @given(st.integers(2**70, 2**80))
    def test_big_coefficients_survive(self, big):
        p = QPolynomial(3, (big, 1))
        assert QPolynomial.from_json(p.to_json()).coefficient(3) == big
