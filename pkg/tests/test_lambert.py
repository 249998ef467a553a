import math

import pytest

from hodge_recursion.lambert import (
    TailBoundError,
    derivative_check,
    h01_constant,
    h02_series,
    lambert_point,
    lambert_report,
    laplace_series,
    report_ok,
    t_of_w,
    unstable_eval,
    w_of_t,
    xi_polynomial_value,
    xi_series_check,
)


@pytest.mark.parametrize("w", [0.5, 1.0, 2.0, 5.0])
def test_lambert_relation(w):
    assert lambert_point(w).residual < 1e-10


def test_lambert_relation_tight_at_w1():
    assert lambert_point(1.0, K=200).residual < 1e-12


def test_t_of_w_large_w():
    assert t_of_w(20.0).value == pytest.approx(1 + math.exp(-21), rel=1e-15, abs=1e-18)


@pytest.mark.parametrize("w", [0.5, 1.0, 3.0])
def test_round_trip(w):
    assert abs(w_of_t(t_of_w(w).value) - w) < 1e-10


def test_w_of_t_values():
    assert w_of_t(2.0) == pytest.approx(math.log(2) - 0.5, abs=1e-15)
    assert w_of_t(1e6) < 1e-12
    with pytest.raises(ValueError):
        w_of_t(1.0)


def test_domain_errors():
    with pytest.raises(ValueError):
        t_of_w(0.0)
    with pytest.raises(ValueError):
        laplace_series(0, 0.0)


def test_tail_bound_dominates_truncation():
    exact = laplace_series(2, 1.0).value
    for K in (5, 10, 20):
        s = laplace_series(2, 1.0, K)
        assert 0 <= exact - s.value <= s.tail_bound


@pytest.mark.parametrize("n", range(0, 5))
@pytest.mark.parametrize("w", [0.5, 1.0, 2.0])
def test_xi_series(n, w):
    assert xi_series_check(n, w).rel_error < 1e-8


def test_xi_series_short_truncation_refused():
    with pytest.raises(TailBoundError):
        xi_series_check(4, 0.5, K=10)


def test_h01_constant_is_one_half():
    # sum k^(k-2)/k! e^{-k} = T - T^2/2 at the tree function value T(1/e) = 1
    c = h01_constant(1e-10)
    assert 0 <= 0.5 - c.value <= c.tail_bound + 1e-15


@pytest.mark.parametrize("w", [0.5, 1.0])
def test_h01_closed_form(w):
    t = t_of_w(w).value
    assert abs(laplace_series(-2, w).value - unstable_eval("H01", t)) < 1e-8


@pytest.mark.parametrize("w1, w2", [(1.0, 1.5), (0.5, 2.0)])
def test_h02_closed_form(w1, w2):
    t1, t2 = t_of_w(w1).value, t_of_w(w2).value
    assert abs(h02_series(w1, w2) - unstable_eval("H02", t1, t2)) < 1e-8


def test_unstable_eval_errors():
    with pytest.raises(ValueError):
        unstable_eval("H02", 1.5, 1.5)
    with pytest.raises(ValueError):
        unstable_eval("H03", 2.0)


def test_y_is_minus_one_index():
    # xi_{-1}(t) = (t-1)/t is y itself, and D sends it to xi_0
    pt = lambert_point(1.0)
    assert pt.y == (pt.t - 1) / pt.t
    t = pt.t
    assert t * t * (t - 1) * (1 / (t * t)) == pytest.approx(xi_polynomial_value(0, t))


@pytest.mark.parametrize("n", range(0, 4))
def test_derivative_identity(n):
    for w in (0.5, 1.0, 2.0):
        assert derivative_check(n, w) < 1e-6


def test_report():
    rep = lambert_report(2, [1.0])
    assert report_ok(rep)
    assert all(isinstance(r["rel_error"], str) for r in rep["xi_series"])
