"""The polynomials xi_n(t) and the change of basis to products of them.

xi_0(t) = t - 1 and xi_{n+1} = D xi_n with D = t^2 (t - 1) d/dt.  Any
polynomial in the span of products prod_i xi_{n_i}(t_i) is converted to its
coefficient map n -> c by leading-term elimination in graded-lex order: the
leading monomial of prod_i xi_{n_i}(t_i) is prod_i t_i^(2 n_i + 1) with
coefficient prod_i (2 n_i - 1)!!, and distinct index tuples have distinct
leading monomials.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Tuple

from .exact import double_factorial
from .polynomial import MultiPoly

__all__ = [
    "NotInXiSpanError",
    "xi",
    "xi_product",
    "a_sequence",
    "to_xi_basis",
    "from_xi_basis",
]

XiExpansion = Dict[Tuple[int, ...], Fraction]


class NotInXiSpanError(ValueError):
    pass


_cache: List[MultiPoly] = [MultiPoly.univariate([-1, 1])]
_lock = threading.Lock()


def xi(n: int) -> MultiPoly:
    """xi_n(t) as an arity-1 polynomial (memoized)."""
    if n < 0:
        raise ValueError("xi_n is a polynomial only for n >= 0")
    if n >= len(_cache):
        with _lock:
            while len(_cache) <= n:
                _cache.append(_cache[-1].apply_D(0))
    return _cache[n]


def xi_product(ns) -> MultiPoly:
    """prod_i xi_{n_i}(t_i) in arity len(ns)."""
    ell = len(ns)
    out = MultiPoly.constant(ell, 1)
    for i, n in enumerate(ns):
        out = out * xi(n).remap([i], ell)
    return out


def a_sequence(n_max: int) -> List[int]:
    """a_1..a_{n_max} with a_n = -[(n+1) a_{n-1} + (-1)^n n!], a_1 read off xi_1."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    a1 = xi(1).coeff((3,))
    assert a1.denominator == 1
    out = [int(a1)]
    for n in range(2, n_max + 1):
        out.append(-((n + 1) * out[-1] + (-1) ** n * factorial(n)))
    return out


def to_xi_basis(p: MultiPoly) -> XiExpansion:
    out: XiExpansion = {}
    rest = p
    # each step removes the current leading monomial, so the loop is bounded
    # by the number of monomials of degree <= deg p
    while not rest.is_zero():
        e, c = rest.leading_term()
        if any(k % 2 == 0 for k in e):
            raise NotInXiSpanError(f"leading monomial {e} has an even exponent")
        ns = tuple((k - 1) // 2 for k in e)
        lead = 1
        for n in ns:
            lead *= double_factorial(2 * n - 1)
        coeff = c / lead
        out[ns] = coeff
        nxt = rest - xi_product(ns).scale(coeff)
        if nxt.coeff(e):
            raise NotInXiSpanError("elimination failed to cancel the leading term")
        rest = nxt
    return out


def from_xi_basis(x: Mapping[Tuple[int, ...], object], arity: int | None = None) -> MultiPoly:
    if arity is None:
        if not x:
            raise ValueError("arity required for an empty expansion")
        arity = len(next(iter(x)))
    out = MultiPoly.zero(arity)
    for ns, c in sorted(x.items()):
        if len(ns) != arity:
            raise ValueError(f"index tuple {ns} does not match arity {arity}")
        out = out + xi_product(ns).scale(c)
    return out
