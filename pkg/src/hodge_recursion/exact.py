"""Exact scalar combinatorics shared by every other module.

Rationals are :class:`fractions.Fraction`; they are always reduced with a
positive denominator, and ``str`` already yields the ``"p/q"`` / ``"p"``
wire form used in JSON and CSV output.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, List, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
    "double_factorial",
    "multinomial",
    "bernoulli_numbers",
    "b_coefficients",
    "b_closed_form",
    "series_inverse",
]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else (floats, exponents) is rejected."""
    m = _RATIONAL_RE.match(s)
    if m is None:
        raise ValueError(f"not an exact rational: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {s!r}")
    return Fraction(num, den)


@lru_cache(maxsize=None)
def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)...; (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n} < -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def multinomial(total: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != total:
        raise ValueError(f"parts {list(parts)} do not sum to {total}")
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def series_inverse(a: Sequence[Fraction], order: int) -> List[Fraction]:
    """Invert a power series with a[0] == 1 modulo u^(order+1)."""
    if not a or a[0] != 1:
        raise ValueError("series_inverse requires a[0] == 1")
    b = [Fraction(0)] * (order + 1)
    b[0] = Fraction(1)
    for m in range(1, order + 1):
        s = Fraction(0)
        for k in range(1, min(m, len(a) - 1) + 1):
            s += a[k] * b[m - k]
        b[m] = -s
    return b


def b_coefficients(g_max: int) -> List[Fraction]:
    """Coefficients b_0..b_{g_max} of (s/2)/sin(s/2) = sum_j b_j s^(2j).

    Obtained by inverting sin(s/2)/(s/2) = sum_k (-1)^k (s/2)^(2k)/(2k+1)!,
    viewed as a series in u = s^2.
    """
    if g_max < 0:
        raise ValueError("g_max must be >= 0")
    sinc = [Fraction((-1) ** k, 4**k * factorial(2 * k + 1)) for k in range(g_max + 1)]
    return series_inverse(sinc, g_max)


def bernoulli_numbers(m_max: int) -> List[Fraction]:
    """B_0..B_{m_max} from sum_{k=0}^{m} C(m+1, k) B_k = 0 (B_1 = -1/2)."""
    B = [Fraction(1)]
    for m in range(1, m_max + 1):
        s = sum(comb(m + 1, k) * B[k] for k in range(m))
        B.append(-s / (m + 1))
    return B


def b_closed_form(g: int, bernoulli: Iterable[Fraction] | None = None) -> Fraction:
    """(2^(2g-1) - 1)/2^(2g-1) * |B_2g| / (2g)!, with b_0 = 1."""
    if g == 0:
        return Fraction(1)
    B = list(bernoulli) if bernoulli is not None else bernoulli_numbers(2 * g)
    p = 2 ** (2 * g - 1)
    return Fraction(p - 1, p) * abs(B[2 * g]) / factorial(2 * g)
