"""psi-class intersection numbers from the DVV recursion, and the two
degree-extremal consistency checks against the polynomial recursion.

Mismatches are returned as lists of :class:`Mismatch` rather than raised.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

from .exact import double_factorial, multinomial
from .partitions import index_splits
from .polynomial import MultiPoly
from .recursion import HodgeTable, stable
from .xi import to_xi_basis

__all__ = [
    "Mismatch",
    "psi_intersection",
    "psi_table",
    "check_top_degree",
    "check_top_degree_monomials",
    "check_lambda_g",
    "top_degree_tuples",
]


@dataclass(frozen=True)
class Mismatch:
    check: str
    g: int
    n: Tuple[int, ...]
    expected: Fraction
    actual: Fraction

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "g": self.g,
            "n": list(self.n),
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


def psi_intersection(g: int, n: Sequence[int]) -> Fraction:
    """<tau_{n_1} ... tau_{n_l}>_g; zero off the dimension 3g - 3 + l."""
    n = tuple(n)
    if any(k < 0 for k in n):
        return Fraction(0)
    return _psi(g, tuple(sorted(n, reverse=True)))


@lru_cache(maxsize=None)
def _psi(g: int, n: Tuple[int, ...]) -> Fraction:
    ell = len(n)
    if g < 0 or not stable(g, ell) or sum(n) != 3 * g - 3 + ell or any(k < 0 for k in n):
        return Fraction(0)
    if (g, n) == (0, (0, 0, 0)):
        return Fraction(1)
    if (g, n) == (1, (1,)):
        return Fraction(1, 24)
    # n is sorted, so n_1 = max; n_1 >= 1 for every non-seed key
    n1, rest = n[0], n[1:]
    df = double_factorial
    total = Fraction(0)
    for j, nj in enumerate(rest):
        others = rest[:j] + rest[j + 1 :]
        m = n1 + nj - 1
        if m < 0:
            continue
        total += Fraction(df(2 * n1 + 2 * nj - 1), df(2 * n1 + 1) * df(2 * nj - 1)) * psi_intersection(
            g, (m,) + others
        )
    inner = Fraction(0)
    for a in range(n1 - 1):
        b = n1 - 2 - a
        w = Fraction(df(2 * a + 1) * df(2 * b + 1), df(2 * n1 + 1))
        term = psi_intersection(g - 1, (a, b) + rest)
        for J, K in index_splits(range(len(rest))):
            for g1 in range(g + 1):
                g2 = g - g1
                if 2 * g1 - 1 + len(J) <= 0 or 2 * g2 - 1 + len(K) <= 0:
                    continue
                term += psi_intersection(g1, (a,) + tuple(rest[k] for k in J)) * psi_intersection(
                    g2, (b,) + tuple(rest[k] for k in K)
                )
        inner += w * term
    return total + inner / 2


def top_degree_tuples(g: int, ell: int) -> List[Tuple[int, ...]]:
    """All n in N^ell with |n| = 3g - 3 + ell."""
    dim = 3 * g - 3 + ell

    def rec(total, k):
        if k == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for tail in rec(total - first, k - 1):
                yield (first,) + tail

    if dim < 0:
        return []
    return list(rec(dim, ell))


def psi_table(max_euler: int) -> Dict[Tuple[int, Tuple[int, ...]], Fraction]:
    from .recursion import keys_up_to

    out = {}
    for g, ell in keys_up_to(max_euler):
        for n in top_degree_tuples(g, ell):
            key = tuple(sorted(n, reverse=True))
            out[(g, key)] = psi_intersection(g, key)
    return out


def check_top_degree(g: int, ell: int, hpoly: MultiPoly, psi=psi_intersection) -> List[Mismatch]:
    """Top-degree xi-coefficients of H_{g,l} against DVV values."""
    expansion = to_xi_basis(hpoly)
    out = []
    for n in top_degree_tuples(g, ell):
        actual = expansion.get(n, Fraction(0))
        expected = psi(g, n)
        if actual != expected:
            out.append(Mismatch("top_degree", g, n, expected, actual))
    return out


def check_top_degree_monomials(g: int, ell: int, hpoly: MultiPoly, psi=psi_intersection) -> List[Mismatch]:
    """Same check read off raw monomials of (chi + sum t^{-1} D) H.

    The coefficient of t_1^(2n_1+2) prod_{j>=2} t_j^(2n_j+1) in the left-hand
    side of the recursion is <tau_n> (2n_1+1)!! prod_{j>=2} (2n_j-1)!!.
    """
    from .recursion import lhs_operator

    chi = 2 * g - 2 + ell
    lhs = lhs_operator(hpoly, chi)
    out = []
    for n in top_degree_tuples(g, ell):
        e = (2 * n[0] + 2,) + tuple(2 * k + 1 for k in n[1:])
        weight = double_factorial(2 * n[0] + 1)
        for k in n[1:]:
            weight *= double_factorial(2 * k - 1)
        actual = lhs.coeff(e) / weight
        expected = psi(g, n)
        if actual != expected:
            out.append(Mismatch("top_degree_monomial", g, n, expected, actual))
    return out


def _tuples_with_sum(total: int, ell: int) -> List[Tuple[int, ...]]:
    if ell == 1:
        return [(total,)]
    return [(a,) + t for a in range(total, -1, -1) for t in _tuples_with_sum(total - a, ell - 1)]


def check_lambda_g(g: int, ell: int, table: HodgeTable, b: Sequence[Fraction]) -> List[Mismatch]:
    """lambda_g relations among lowest-degree coefficients.

    Checks <tau_n lambda_g> = multinomial(2g-3+l; n) <tau_{2g-2} lambda_g>_{g,1},
    <tau_{2g-2} lambda_g>_{g,1} = b_g, and the l-recursion
    (l-1) <tau_n lambda_g> = sum_{i<j} C(n_i+n_j, n_i) <tau_{n_i+n_j-1} tau_rest lambda_g>.
    """
    if g < 1:
        raise ValueError("lambda_g checks need g >= 1")
    need = {(g, 1), (g, ell)} | ({(g, ell - 1)} if ell >= 2 else set())
    missing = need - table.complete
    if missing:
        raise KeyError(f"Hodge table incomplete for {sorted(missing)}")
    out = []
    base = table.get(g, (2 * g - 2,), g)
    if base != b[g]:
        out.append(Mismatch("lambda_g_b", g, (2 * g - 2,), b[g], base))
    for n in _tuples_with_sum(2 * g - 3 + ell, ell):
        actual = table.get(g, n, g)
        expected = multinomial(2 * g - 3 + ell, n) * base
        if actual != expected:
            out.append(Mismatch("lambda_g_multinomial", g, n, expected, actual))
        if ell >= 2:
            rhs = Fraction(0)
            for i in range(ell):
                for j in range(i + 1, ell):
                    m = n[i] + n[j] - 1
                    if m < 0:
                        continue
                    rest = tuple(n[k] for k in range(ell) if k not in (i, j))
                    rhs += comb(n[i] + n[j], n[i]) * table.get(g, (m,) + rest, g)
            if (ell - 1) * actual != rhs:
                out.append(Mismatch("lambda_g_l_recursion", g, n, rhs, (ell - 1) * actual))
    return out
