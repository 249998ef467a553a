"""Polynomial topological recursion for the generating functions H_{g,l}.

H_{g,l}(t_1..t_l) = sum_n <tau_n Lambda_g^v(1)>_{g,l} prod_i xi_{n_i}(t_i)

is computed from lower Euler characteristic chi = 2g - 2 + l by assembling a
right-hand side R and solving

    (chi + sum_i t_i^{-1} D_i) H = R.

Writing t_i^{-1} D_i = (t_i^2 - t_i) d/dt_i, the operator sends a homogeneous
piece H_d of degree d to (chi - d) H_d + T(H_d) with T = sum_i t_i^2 d/dt_i
raising the degree by one.  The scalar vanishes at d = chi, so the pieces of
degree < chi are found bottom-up and the pieces of degree >= chi top-down by
inverting T, which is triangular in lex order.  The degree-chi equation is
then a consistency check.
"""
from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from .exact import parse_rational
from .hurwitz import HurwitzValue, Provenance
from .partitions import Partition, aut_order, index_splits, partition, rh_count
from .polynomial import MultiPoly, NotDivisibleError
from .xi import from_xi_basis, to_xi_basis, xi

__all__ = [
    "RecursionError_",
    "stable",
    "keys_up_to",
    "seed_H",
    "solve_lhs",
    "rhs_main",
    "rhs_alt",
    "HodgeEngine",
    "HodgeTable",
    "extract_hodge",
    "elsv_evaluate",
    "CACHE_VERSION",
]

CACHE_VERSION = 1


class RecursionError_(ArithmeticError):
    """An invariant of the recursion (polynomiality, symmetry, degree) failed."""


def stable(g: int, ell: int) -> bool:
    return g >= 0 and ell >= 1 and 2 * g - 2 + ell > 0


def keys_up_to(max_euler: int) -> List[Tuple[int, int]]:
    """Stable (g, l) with 2g - 2 + l <= max_euler, by chi then g."""
    out = []
    for chi in range(1, max_euler + 1):
        for g in range(0, chi // 2 + 2):
            ell = chi + 2 - 2 * g
            if ell >= 1 and stable(g, ell):
                out.append((g, ell))
    return out


def seed_H(g: int, ell: int) -> Optional[MultiPoly]:
    """Base cases whose recursion would reference the non-polynomial H_{0,2}."""
    if (g, ell) == (0, 3):
        return from_xi_basis({(0, 0, 0): 1})
    if (g, ell) == (1, 1):
        return from_xi_basis({(1,): Fraction(1, 24), (0,): Fraction(-1, 24)})
    return None


# -- the left-hand operator --------------------------------------------------


def _apply_T(p: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(p.arity)
    for i in range(p.arity):
        unit = [0] * p.arity
        unit[i] = 2
        out = out + p.derivative(i).mul_monomial(unit)
    return out


def _invert_T(y: MultiPoly) -> MultiPoly:
    """Solve T(x) = y for homogeneous y; raises on a non-polynomial residue."""
    ell = y.arity
    x = MultiPoly.zero(ell)
    rest = y
    while not rest.is_zero():
        f = max(rest.terms)  # lex-leading, y is homogeneous
        c = rest.coeff(f)
        i0 = next(k for k, v in enumerate(f) if v)
        if f[i0] < 2:
            raise RecursionError_(f"T is not invertible on monomial {f}")
        e = list(f)
        e[i0] -= 1
        piece = MultiPoly(ell, {tuple(e): c / e[i0]})
        x = x + piece
        rest = rest - _apply_T(piece)
        if rest.coeff(f):
            raise RecursionError_("triangular elimination of T did not cancel")
    return x


def lhs_operator(h: MultiPoly, chi: int) -> MultiPoly:
    out = h.scale(chi)
    for i in range(h.arity):
        out = out + h.euler_shift(i)
    return out


def solve_lhs(r: MultiPoly, chi: int, expected_degree: Optional[int] = None) -> MultiPoly:
    """The unique polynomial H with (chi + sum_i t_i^{-1} D_i) H = r."""
    ell = r.arity
    if r.is_zero():
        return MultiPoly.zero(ell)
    top = r.total_degree() - 1
    if expected_degree is not None and top != expected_degree:
        raise RecursionError_(f"right-hand side has degree {top + 1}, expected {expected_degree + 1}")
    if top < chi:
        raise RecursionError_("right-hand side degree below the resonant degree")
    parts: Dict[int, MultiPoly] = {}
    prev = MultiPoly.zero(ell)
    for d in range(chi):
        h_d = (r.homogeneous_part(d) - _apply_T(prev)).scale(Fraction(1, chi - d))
        parts[d] = h_d
        prev = h_d
    upper = MultiPoly.zero(ell)
    for d in range(top, chi - 1, -1):
        h_d = _invert_T(r.homogeneous_part(d + 1) - upper.scale(chi - d - 1))
        parts[d] = h_d
        upper = h_d
    h = MultiPoly.zero(ell)
    for d in sorted(parts):
        h = h + parts[d]
    if lhs_operator(h, chi) != r:
        raise RecursionError_("left-hand operator has no polynomial preimage")
    return h


# -- right-hand sides --------------------------------------------------------


def _embed(p: MultiPoly, targets, ell: int) -> MultiPoly:
    return p.remap(list(targets), ell)


def _xi0(ell: int, j: int) -> MultiPoly:
    return xi(0).remap([j], ell)


def _genus_reduction_D(hprev: MultiPoly, i: int, ell: int) -> MultiPoly:
    """[D_u1 D_u2 H(u1, u2, t_{L minus i})] at u1 = u2 = t_i."""
    q = hprev.apply_D(0).apply_D(1)
    others = [k for k in range(ell) if k != i]
    return q.remap([i, i] + others, ell)


def _genus_reduction_mixed(hprev: MultiPoly, i: int, ell: int) -> MultiPoly:
    """Same term via u1^2(u1-1) u2^2(u2-1) d^2/du1 du2."""
    q = hprev.derivative(0).derivative(1)
    n = hprev.arity
    w = MultiPoly(n, {})
    for a, b in ((3, 3), (3, 2), (2, 3), (2, 2)):
        e = [0] * n
        e[0], e[1] = a, b
        sign = (-1) ** ((a == 2) + (b == 2))
        w = w + MultiPoly(n, {tuple(e): sign})
    others = [k for k in range(ell) if k != i]
    return (q * w).remap([i, i] + others, ell)


def _split_terms(g: int, ell: int, get) -> MultiPoly:
    """1/2 sum_i sum^{stable} D_i H_{g1}(t_i, t_J) D_i H_{g2}(t_i, t_K)."""
    total = MultiPoly.zero(ell)
    for i in range(ell):
        rest = [k for k in range(ell) if k != i]
        for J, K in index_splits(rest):
            for g1 in range(g + 1):
                g2 = g - g1
                if 2 * g1 - 1 + len(J) <= 0 or 2 * g2 - 1 + len(K) <= 0:
                    continue
                a = _embed(get(g1, len(J) + 1), (i,) + J, ell).apply_D(i)
                b = _embed(get(g2, len(K) + 1), (i,) + K, ell).apply_D(i)
                total = total + a * b
    return total.scale(Fraction(1, 2))


def rhs_main(g: int, ell: int, get) -> MultiPoly:
    """Right-hand side in the D-operator form with the (t_i - t_j) quotient."""
    r = MultiPoly.zero(ell)
    if ell >= 2 and stable(g, ell - 1):
        lower = get(g, ell - 1)
        for i in range(ell):
            for j in range(i + 1, ell):
                a = _embed(lower, [k for k in range(ell) if k != j], ell).apply_D(i)
                b = _embed(lower, [k for k in range(ell) if k != i], ell).apply_D(j)
                ti2 = [0] * ell
                ti2[i] = 2
                tj2 = [0] * ell
                tj2[j] = 2
                num = (a * _xi0(ell, j)).mul_monomial(ti2) - (b * _xi0(ell, i)).mul_monomial(tj2)
                try:
                    r = r + num.divided_difference(i, j)
                except NotDivisibleError as exc:
                    raise RecursionError_(f"(g,l)=({g},{ell}) pair ({i},{j}): {exc}") from exc
    if g >= 1 and stable(g - 1, ell + 1):
        prev = get(g - 1, ell + 1)
        for i in range(ell):
            r = r + _genus_reduction_D(prev, i, ell).scale(Fraction(1, 2))
    return r + _split_terms(g, ell, get)


def rhs_alt(g: int, ell: int, get) -> MultiPoly:
    """Right-hand side in the t_i t_j / (t_i - t_j) form with the t_i^3 correction."""
    r = MultiPoly.zero(ell)
    if ell >= 2 and stable(g, ell - 1):
        lower = get(g, ell - 1)
        drop = {j: _embed(lower, [k for k in range(ell) if k != j], ell) for j in range(ell)}
        one = MultiPoly.constant(ell, 1)
        for i in range(ell):
            ti = MultiPoly.variable(ell, i)
            for j in range(ell):
                if i == j:
                    continue
                # t_i^3 (t_i - 1) d/dt_i H(t_{L minus j})
                corr = drop[j].derivative(i) * ti * ti * ti * (ti - one)
                r = r - corr
        for i in range(ell):
            ti = MultiPoly.variable(ell, i)
            for j in range(i + 1, ell):
                tj = MultiPoly.variable(ell, j)
                a = drop[j].derivative(i) * ti * ti * (ti - one) * (ti - one)
                b = drop[i].derivative(j) * tj * tj * (tj - one) * (tj - one)
                try:
                    q = (a - b).divided_difference(i, j)
                except NotDivisibleError as exc:
                    raise RecursionError_(f"(g,l)=({g},{ell}) pair ({i},{j}): {exc}") from exc
                r = r + q * ti * tj
    if g >= 1 and stable(g - 1, ell + 1):
        prev = get(g - 1, ell + 1)
        for i in range(ell):
            r = r + _genus_reduction_mixed(prev, i, ell).scale(Fraction(1, 2))
    return r + _split_terms(g, ell, get)


# -- engine with cache -------------------------------------------------------


class HodgeEngine:
    """Memoized H_{g,l}, optionally persisted as xi-expansion JSON."""

    def __init__(self, cache_path: Optional[os.PathLike] = None, form: str = "main"):
        if form not in ("main", "alt"):
            raise ValueError("form must be 'main' or 'alt'")
        self.form = form
        self.cache_path = Path(cache_path) if cache_path is not None else None
        self._polys: Dict[Tuple[int, int], MultiPoly] = {}
        self._lock = threading.RLock()
        self.computed: List[Tuple[int, int]] = []
        if self.cache_path is not None and self.cache_path.exists():
            self.load(self.cache_path)

    def H(self, g: int, ell: int) -> MultiPoly:
        if not stable(g, ell):
            raise ValueError(f"(g,l)=({g},{ell}) is unstable; H is not a polynomial there")
        key = (g, ell)
        with self._lock:
            if key not in self._polys:
                self._polys[key] = self._compute(g, ell)
                self.computed.append(key)
            return self._polys[key]

    __call__ = H

    def _compute(self, g: int, ell: int) -> MultiPoly:
        seeded = seed_H(g, ell)
        if seeded is not None:
            return seeded
        chi = 2 * g - 2 + ell
        build = rhs_main if self.form == "main" else rhs_alt
        r = build(g, ell, self.H)
        h = solve_lhs(r, chi, expected_degree=3 * chi)
        check_H(g, ell, h)
        return h

    def expansion(self, g: int, ell: int):
        return to_xi_basis(self.H(g, ell))

    # cache file

    def to_json(self) -> dict:
        entries = []
        for g, ell in sorted(self._polys):
            exp = to_xi_basis(self._polys[(g, ell)])
            entries.append(
                {
                    "g": g,
                    "ell": ell,
                    "xi_coeffs": [
                        {"n": list(n), "value": str(v)} for n, v in sorted(exp.items())
                    ],
                }
            )
        return {"version": CACHE_VERSION, "entries": entries}

    def save(self, path: Optional[os.PathLike] = None):
        path = Path(path) if path is not None else self.cache_path
        if path is None:
            raise ValueError("no cache path")
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n")
        tmp.replace(path)

    def load(self, path: os.PathLike):
        data = json.loads(Path(path).read_text())
        if data.get("version") != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {data.get('version')!r}")
        for entry in data["entries"]:
            g, ell = entry["g"], entry["ell"]
            exp = {tuple(c["n"]): parse_rational(c["value"]) for c in entry["xi_coeffs"]}
            h = from_xi_basis(exp, arity=ell)
            if seed_H(g, ell) is None:
                check_H(g, ell, h)
            self._polys[(g, ell)] = h


def check_H(g: int, ell: int, h: MultiPoly):
    chi = 2 * g - 2 + ell
    if h.total_degree() != 3 * chi:
        raise RecursionError_(f"H_{g},{ell} has degree {h.total_degree()}, expected {3 * chi}")
    if not h.is_symmetric():
        raise RecursionError_(f"H_{g},{ell} is not symmetric")


# -- Hodge integrals ---------------------------------------------------------


@dataclass
class HodgeTable:
    """<tau_{n_1} ... tau_{n_l} lambda_j>_{g,l} keyed by sorted n."""

    entries: Dict[Tuple[int, int, Tuple[int, ...], int], Fraction] = field(default_factory=dict)
    complete: set = field(default_factory=set)

    def get(self, g: int, n, j: int) -> Fraction:
        n = tuple(sorted(n, reverse=True))
        return self.entries.get((g, len(n), n, j), Fraction(0))

    def xi_coefficient(self, g: int, n) -> Fraction:
        """<tau_n Lambda_g^v(1)> = (-1)^j <tau_n lambda_j>."""
        j = 3 * g - 3 + len(n) - sum(n)
        if j < 0 or j > g:
            return Fraction(0)
        return (-1) ** j * self.get(g, n, j)

    def update(self, other: "HodgeTable"):
        self.entries.update(other.entries)
        self.complete |= other.complete

    def rows(self) -> Iterator[Tuple[int, int, Tuple[int, ...], int, Fraction]]:
        for (g, ell, n, j), v in sorted(self.entries.items()):
            yield g, ell, n, j, v


def extract_hodge(g: int, ell: int, h: MultiPoly) -> HodgeTable:
    expansion = to_xi_basis(h)
    table = HodgeTable()
    dim = 3 * g - 3 + ell
    for n, c in expansion.items():
        if len(n) != ell:
            raise RecursionError_("expansion arity mismatch")
        j = dim - sum(n)
        if j < 0 or j > g:
            raise RecursionError_(f"nonzero coefficient at n={n} would need lambda_{j} in genus {g}")
        key = (g, ell, tuple(sorted(n, reverse=True)), j)
        value = (-1) ** j * c
        if key in table.entries and table.entries[key] != value:
            raise RecursionError_(f"coefficients not symmetric at n={n}")
        table.entries[key] = value
    table.complete.add((g, ell))
    return table


def _compositions(total_max: int, ell: int) -> Iterator[Tuple[int, ...]]:
    if ell == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in _compositions(total_max - first, ell - 1):
            yield (first,) + rest


def hodge_integral_elsv(g: int, mu: Partition, table: HodgeTable) -> Fraction:
    """int Lambda_g^v(1) / prod (1 - mu_i psi_i), with the unstable conventions."""
    ell = len(mu)
    if (g, ell) == (0, 1):
        return Fraction(1, mu[0] ** 2)
    if (g, ell) == (0, 2):
        return Fraction(1, sum(mu))
    if (g, ell) not in table.complete:
        raise KeyError(f"Hodge table incomplete for (g,l)=({g},{ell})")
    total = Fraction(0)
    for n in _compositions(3 * g - 3 + ell, ell):
        c = table.xi_coefficient(g, n)
        if c:
            total += c * prod(m**k for m, k in zip(mu, n))
    return total


def elsv_evaluate(g: int, mu, table: HodgeTable) -> HurwitzValue:
    mu = partition(mu)
    r = rh_count(g, mu)
    weight = Fraction(factorial(r), aut_order(mu))
    for m in mu:
        weight *= Fraction(m**m, factorial(m))
    return HurwitzValue(g, mu, weight * hodge_integral_elsv(g, mu, table), Provenance.ELSV)
