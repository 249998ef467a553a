from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodge_recursion.polynomial import MultiPoly, NotDivisibleError


def polys(arity, max_deg=4, max_terms=6):
    exps = st.tuples(*[st.integers(0, max_deg)] * arity)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: MultiPoly(arity, d))


def points(arity):
    return st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=5)] * arity)


def test_construction_prunes_zeros():
    p = MultiPoly(2, [((1, 0), 1), ((1, 0), -1), ((0, 2), 0)])
    assert p.is_zero()
    assert MultiPoly.constant(3, 0).is_zero()
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly(1, {(-1,): 1})


def test_basic_arithmetic():
    t1, t2 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    p = (t1 + t2) ** 2
    assert p == t1 * t1 + t2 * t2 + t1 * t2 * 2
    assert p - p == MultiPoly.zero(2)
    assert (p * Fraction(1, 2)).coeff((1, 1)) == 1
    assert p.total_degree() == 2 and p.min_degree() == 2
    assert (1 - t1).coeff((0, 0)) == 1


def test_arity_mismatch():
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) + MultiPoly.variable(3, 0)


def test_text_form():
    p = MultiPoly.univariate([0, 0, 0, 2, -5, 3])
    assert p.to_text() == "3*t^5 + -5*t^4 + 2*t^3"
    q = MultiPoly(2, {(2, 1): Fraction(1, 2), (0, 0): -1})
    assert q.to_text() == "1/2*t1^2*t2 + -1"
    assert MultiPoly.zero(2).to_text() == "0"


@given(polys(3))
def test_json_round_trip(p):
    assert MultiPoly.from_json(3, p.to_json()) == p


@given(polys(2), polys(2), points(2))
def test_evaluate_is_a_ring_map(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


@given(polys(2), polys(2))
def test_D_is_a_derivation(p, q):
    for i in range(2):
        assert (p * q).apply_D(i) == p.apply_D(i) * q + p * q.apply_D(i)


@given(polys(2))
def test_D_is_t2_tminus1_times_derivative(p):
    t = MultiPoly.variable(2, 0)
    assert p.apply_D(0) == t * t * (t - 1) * p.derivative(0)


@given(polys(3, max_deg=3), st.sampled_from([(0, 1), (1, 2), (2, 0)]))
@settings(max_examples=60)
def test_divided_difference_inverts_multiplication(q, ij):
    i, j = ij
    lin = MultiPoly.variable(3, i) - MultiPoly.variable(3, j)
    assert (q * lin).divided_difference(i, j) == q


@given(polys(2, max_deg=3))
def test_divided_difference_of_antisymmetric(p):
    # p(t1,t2) - p(t2,t1) is always divisible by t1 - t2
    a = p - p.permute([1, 0])
    q = a.divided_difference(0, 1)
    assert q * (MultiPoly.variable(2, 0) - MultiPoly.variable(2, 1)) == a


def test_divided_difference_remainder_raises():
    with pytest.raises(NotDivisibleError):
        MultiPoly.variable(2, 0).divided_difference(0, 1)
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0).divided_difference(1, 1)


def test_remap_diagonal_and_permute():
    p = MultiPoly(2, {(2, 1): 1, (0, 1): 3})
    d = p.remap([0, 0], 1)
    assert d == MultiPoly(1, {(3,): 1, (1,): 3})
    assert p.permute([1, 0]) == MultiPoly(2, {(1, 2): 1, (1, 0): 3})
    assert not p.is_symmetric()
    assert p.symmetrize().is_symmetric()


def test_euler_shift_and_divide_by_variable():
    t = MultiPoly.variable(1, 0)
    # (t^2 - t) d/dt t^3 = 3 t^4 - 3 t^3
    assert (t**3).euler_shift(0) == MultiPoly.univariate([0, 0, 0, -3, 3])
    with pytest.raises(NotDivisibleError):
        MultiPoly.constant(1, 1).divide_by_variable(0)


def test_leading_term_graded_lex():
    p = MultiPoly(2, {(0, 3): 1, (2, 1): 5, (1, 1): 7})
    assert p.leading_term() == ((2, 1), 5)
    assert [e for e, _ in p.sorted_terms()] == [(2, 1), (0, 3), (1, 1)]


def test_float_evaluation():
    p = MultiPoly.univariate([1, Fraction(1, 2)])
    assert p.evaluate((2.0,)) == pytest.approx(2.0)
    assert isinstance(p.evaluate((2.0,)), float)
    assert p.evaluate((Fraction(1, 3),)) == Fraction(7, 6)
