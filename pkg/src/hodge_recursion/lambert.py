"""Floating-point checks of the Laplace-transform layer on the Lambert curve.

Coordinates: w > 0, x = exp(-(w+1)), t = 1 + sum_k k^k/k! x^k, y = (t-1)/t.
Every series here has the shape

    S_p(w) = sum_{k>=1} k^(k+p)/k! exp(-k(w+1)),

and Stirling's lower bound k! >= sqrt(2 pi k) (k/e)^k gives the termwise
majorant k^(p-1/2) exp(-k w)/sqrt(2 pi), which is what the tail bounds use.
Nothing here feeds the exact pipeline.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.special import gammaln

from .xi import xi

__all__ = [
    "LambertPoint",
    "SeriesSum",
    "TailBoundError",
    "laplace_series",
    "t_of_w",
    "w_of_t",
    "lambert_point",
    "xi_polynomial_value",
    "xi_series_check",
    "h01_constant",
    "unstable_eval",
    "h02_series",
    "derivative_check",
    "lambert_report",
    "report_ok",
    "TOLERANCES",
]

SQRT_2PI = math.sqrt(2 * math.pi)
DEFAULT_TAIL = 1e-14
_MAX_TERMS = 1 << 22
# pass thresholds used by lambert_report
TOLERANCES = {"lambert": 1e-10, "xi_series": 1e-8, "h01": 1e-8, "h02": 1e-8, "derivative": 1e-6}


class TailBoundError(ValueError):
    """The requested truncation does not meet the tail bound."""


@dataclass(frozen=True)
class SeriesSum:
    value: float
    terms: int
    tail_bound: float


@dataclass(frozen=True)
class LambertPoint:
    w: float
    t: float
    x: float
    y: float

    @property
    def residual(self) -> float:
        """|x - y e^{-y}|."""
        return abs(self.x - self.y * math.exp(-self.y))


def _terms(power: int, w: float, K: int) -> np.ndarray:
    k = np.arange(1, K + 1, dtype=np.float64)
    return np.exp((k + power) * np.log(k) - gammaln(k + 1) - k * (w + 1))


def _tail_bound(power: int, w: float, K: int) -> float:
    """Bound on sum_{k>K} of the Stirling majorant.

    For w > 0 the majorant ratio between consecutive terms is at most
    rho = max(1, ((K+2)/(K+1))^(p-1/2)) e^{-w}, so the tail is geometric.
    For w = 0 and p < -1/2 the integral test applies instead.
    """
    a = power - 0.5
    first = (K + 1) ** a * math.exp(-(K + 1) * w) / SQRT_2PI
    if w > 0:
        rho = max(1.0, ((K + 2) / (K + 1)) ** a) * math.exp(-w)
        if rho >= 1:
            return math.inf
        return first / (1 - rho)
    if a < -1:
        return K ** (a + 1) / (-(a + 1)) / SQRT_2PI
    return math.inf


def laplace_series(power: int, w: float, K: Optional[int] = None, tol: float = DEFAULT_TAIL) -> SeriesSum:
    """Partial sum of S_p(w) over k <= K with its tail bound.

    With K omitted the smallest power of two meeting ``tol`` is used.
    """
    if w < 0 or (w == 0 and power - 0.5 >= -1):
        raise ValueError(f"series S_{power} does not converge at w={w}")
    if K is None:
        K = 16
        while _tail_bound(power, w, K) > tol:
            K *= 2
            if K > _MAX_TERMS:
                raise TailBoundError(f"S_{power}(w={w}) needs more than {_MAX_TERMS} terms for {tol}")
    if K < 1:
        raise ValueError("K must be >= 1")
    terms = _terms(power, w, K)
    # add small terms first
    return SeriesSum(math.fsum(terms[::-1]), K, _tail_bound(power, w, K))


def t_of_w(w: float, K: Optional[int] = None) -> SeriesSum:
    if w <= 0:
        raise ValueError("t(w) needs w > 0")
    s = laplace_series(0, w, K)
    return SeriesSum(1.0 + s.value, s.terms, s.tail_bound)


def w_of_t(t: float) -> float:
    if t <= 1:
        raise ValueError("w(t) needs t > 1")
    return -1.0 / t - math.log1p(-1.0 / t)


def lambert_point(w: float, K: Optional[int] = None) -> LambertPoint:
    t = t_of_w(w, K).value
    return LambertPoint(w, t, math.exp(-(w + 1)), (t - 1) / t)


def xi_polynomial_value(n: int, t: float) -> float:
    """xi_n(t) evaluated exactly at the binary value of t, then rounded."""
    return float(xi(n).evaluate((Fraction(t),)))


@dataclass(frozen=True)
class XiCheck:
    n: int
    w: float
    t: float
    polynomial: float
    series: float
    rel_error: float
    terms: int
    tail_bound: float


def xi_series_check(n: int, w: float, K: Optional[int] = None, tail_tol: float = 1e-10) -> XiCheck:
    """Compare the polynomial xi_n(t(w)) with its defining series."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = laplace_series(n, w, K)
    if s.tail_bound > tail_tol:
        raise TailBoundError(f"K={s.terms} leaves tail bound {s.tail_bound:.3g} > {tail_tol}")
    t = t_of_w(w).value
    p = xi_polynomial_value(n, t)
    return XiCheck(n, w, t, p, s.value, abs(p - s.value) / abs(s.value), s.terms, s.tail_bound)


def h01_constant(tol: float = 1e-10) -> SeriesSum:
    """c = sum_k k^(k-2)/k! e^{-k}, summed until the tail bound is below tol."""
    return laplace_series(-2, 0.0, tol=tol)


def h02_series(w1: float, w2: float, mu_max: int = 60) -> float:
    """sum_{mu_i <= mu_max} 1/(mu1+mu2) mu1^mu1/mu1! mu2^mu2/mu2! e^{-mu1(w1+1) - mu2(w2+1)}."""
    a = _terms(0, w1, mu_max)
    b = _terms(0, w2, mu_max)
    m = np.arange(1, mu_max + 1, dtype=np.float64)
    grid = np.outer(a, b) / np.add.outer(m, m)
    return math.fsum(grid.ravel()[::-1])


def unstable_eval(kind: str, *args: float, c: Optional[float] = None) -> float:
    """Closed forms of the two unstable transforms.

    ``H01`` takes t; ``H02`` takes t1, t2 (distinct, both > 1).
    """
    if kind == "H01":
        (t,) = args
        if t <= 1:
            raise ValueError("t must be > 1")
        if c is None:
            c = h01_constant().value
        return -1.0 / (2 * t * t) + c
    if kind == "H02":
        t1, t2 = args
        if t1 <= 1 or t2 <= 1 or t1 == t2:
            raise ValueError("H02 needs distinct t1, t2 > 1")
        y1, y2 = (t1 - 1) / t1, (t2 - 1) / t2
        w1, w2 = w_of_t(t1), w_of_t(t2)
        x1, x2 = math.exp(-(w1 + 1)), math.exp(-(w2 + 1))
        return math.log((y1 - y2) / (x1 - x2)) - y1 - y2
    raise ValueError(f"unknown unstable kind {kind!r}")


def derivative_check(n: int, w: float, step: float = 1e-5) -> float:
    """Relative error of the central difference of xi_n(t(w)) against -xi_{n+1}(t(w))."""
    f = lambda v: xi_polynomial_value(n, t_of_w(v).value)
    fd = (f(w + step) - f(w - step)) / (2 * step)
    target = -xi_polynomial_value(n + 1, t_of_w(w).value)
    return abs(fd - target) / abs(target)


def _g17(v: float) -> str:
    return format(v, ".17g")


def lambert_report(n_max: int = 4, ws: Sequence[float] = (0.5, 1.0, 2.0)) -> Dict[str, List[dict]]:
    """All numeric checks as JSON-ready rows; floats as 17-significant-digit strings.

    Every row carries "ok" judged against TOLERANCES.
    """
    tol = TOLERANCES
    report: Dict[str, List[dict]] = {k: [] for k in ("lambert", "xi_series", "h01", "h02", "derivative")}
    c = h01_constant().value
    for w in ws:
        pt = lambert_point(w)
        report["lambert"].append(
            {"w": _g17(w), "t": _g17(pt.t), "residual": _g17(pt.residual), "ok": pt.residual < tol["lambert"]}
        )
        for n in range(n_max + 1):
            chk = xi_series_check(n, w)
            report["xi_series"].append(
                {
                    "n": n,
                    "w": _g17(w),
                    "rel_error": _g17(chk.rel_error),
                    "terms": chk.terms,
                    "ok": chk.rel_error < tol["xi_series"],
                }
            )
        for n in range(min(n_max, 3) + 1):
            err = derivative_check(n, w)
            report["derivative"].append({"n": n, "w": _g17(w), "rel_error": _g17(err), "ok": err < tol["derivative"]})
        err = abs(laplace_series(-2, w).value - unstable_eval("H01", pt.t, c=c))
        report["h01"].append({"w": _g17(w), "abs_error": _g17(err), "ok": err < tol["h01"]})
    for w1, w2 in ((1.0, 1.5), (0.5, 2.0)):
        t1, t2 = t_of_w(w1).value, t_of_w(w2).value
        series = h02_series(w1, w2)
        err = abs(series - unstable_eval("H02", t1, t2))
        report["h02"].append(
            {"w": [_g17(w1), _g17(w2)], "abs_error": _g17(err), "rel_error": _g17(err / abs(series)), "ok": err < tol["h02"]}
        )
    return report


def report_ok(report: Dict[str, List[dict]]) -> bool:
    return all(row["ok"] for rows in report.values() for row in rows)
