"""Ground-truth simple Hurwitz numbers and the combinatorial cut-and-join check.

The oracle counts tuples of transpositions (tau_1, ..., tau_r) in S_d whose
product is a fixed permutation sigma_0 of cycle type mu and which generate a
transitive subgroup.  Then

    h_{g,mu} = |C_mu| / d! * #tuples,   |C_mu| = d! / (prod mu_i * prod m_k!).
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .partitions import (
    Partition,
    aut_order,
    index_splits,
    join_parts,
    partition,
    remove_part,
    rh_count,
    sub_multisets,
)

__all__ = [
    "DEFAULT_BUDGET",
    "OracleInfeasible",
    "Provenance",
    "HurwitzValue",
    "HFunction",
    "canonical_permutation",
    "count_factorizations",
    "hurwitz_oracle",
    "hurwitz_closed_form",
    "two_pole_product",
    "h_function",
    "CutJoinResult",
    "cut_and_join_verify",
    "OracleTable",
]

DEFAULT_BUDGET = 10**7


class OracleInfeasible(RuntimeError):
    """The enumeration would exceed the leaf budget."""


class Provenance(str, enum.Enum):
    ORACLE = "oracle"
    CLOSED_FORM = "closed_form"
    ELSV = "elsv"


@dataclass(frozen=True)
class HurwitzValue:
    g: int
    mu: Partition
    value: Fraction
    provenance: Provenance

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "mu": list(self.mu),
            "h": str(self.value),
            "provenance": self.provenance.value,
        }


@dataclass(frozen=True)
class HFunction:
    g: int
    mu: Partition
    value: Fraction


def canonical_permutation(mu: Partition) -> Tuple[int, ...]:
    """The permutation with cycles (0 1 .. mu_1-1)(mu_1 ...)..."""
    perm = []
    start = 0
    for part in mu:
        perm += [start + (k + 1) % part for k in range(part)]
        start += part
    return tuple(perm)


def _cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for x in range(len(perm)):
        if not seen[x]:
            n = 0
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                n += 1
            lengths.append(n)
    return partition(lengths)


def _is_transitive(d: int, chosen: Sequence[Tuple[int, int]]) -> bool:
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = d
    for a, b in chosen:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
            if components == 1:
                return True
    return components == 1


def _count_stratum(d: int, r: int, target: Tuple[int, ...], first: Optional[int]) -> int:
    transpositions = list(combinations(range(d), 2))
    target = list(target)
    perm = list(range(d))
    chosen: List[Tuple[int, int]] = []
    count = 0

    def dfs(depth: int):
        nonlocal count
        if depth == r:
            if perm == target and _is_transitive(d, chosen):
                count += 1
            return
        choices = transpositions if (depth or first is None) else [transpositions[first]]
        for ab in choices:
            a, b = ab
            perm[a], perm[b] = perm[b], perm[a]
            chosen.append(ab)
            dfs(depth + 1)
            chosen.pop()
            perm[a], perm[b] = perm[b], perm[a]

    dfs(0)
    return count


def count_factorizations(
    mu: Partition,
    r: int,
    sigma0: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> int:
    """Transitive r-tuples of transpositions multiplying to sigma0 (cycle type mu).

    Transitivity is tested at the leaves only: a later transposition can merge
    orbits, so pruning partial tuples on orbit count would be unsound.
    """
    d = sum(mu)
    target = tuple(sigma0) if sigma0 is not None else canonical_permutation(mu)
    if _cycle_type(target) != partition(mu):
        raise ValueError(f"base permutation does not have cycle type {mu}")
    n_trans = d * (d - 1) // 2
    if r == 0 or workers <= 1 or n_trans <= 1:
        return _count_stratum(d, r, target, None)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        futures = [ex.submit(_count_stratum, d, r, target, k) for k in range(n_trans)]
        return sum(f.result() for f in futures)


def hurwitz_oracle(
    g: int,
    mu,
    budget: int = DEFAULT_BUDGET,
    sigma0: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> HurwitzValue:
    mu = partition(mu)
    d = sum(mu)
    if d < 1:
        raise ValueError("degree must be >= 1")
    if g < 0:
        raise ValueError("genus must be >= 0")
    r = rh_count(g, mu)
    n_trans = d * (d - 1) // 2
    leaves = n_trans**r
    if leaves > budget:
        raise OracleInfeasible(
            f"oracle for g={g}, mu={mu} needs {n_trans}^{r} = {leaves} leaves > budget {budget}"
        )
    count = count_factorizations(mu, r, sigma0=sigma0, workers=workers)
    class_size = Fraction(factorial(d), prod(mu) * aut_order(mu))
    return HurwitzValue(g, mu, class_size * count / factorial(d), Provenance.ORACLE)


def hurwitz_closed_form(g: int, mu) -> HurwitzValue:
    """Genus-0 closed forms for one or two poles.

    The two-pole value is the raw product formula divided by |Aut(mu)|, which
    is the normalization the enumeration oracle and ELSV both produce; the two
    differ only for mu = (k, k).  The raw product is available as
    :func:`two_pole_product`.
    """
    mu = partition(mu)
    if g != 0 or len(mu) not in (1, 2):
        raise ValueError("closed forms exist only for g = 0 and l(mu) in {1, 2}")
    if len(mu) == 1:
        k = mu[0]
        value = Fraction(k) ** (k - 3)
    else:
        value = two_pole_product(*mu) / aut_order(mu)
    return HurwitzValue(g, mu, value, Provenance.CLOSED_FORM)


def two_pole_product(a: int, b: int) -> Fraction:
    """(a+b)!/(a+b) * a^a/a! * b^b/b!, without the automorphism factor."""
    if a < 1 or b < 1:
        raise ValueError("parts must be positive")
    return (
        Fraction(factorial(a + b), a + b)
        * Fraction(a**a, factorial(a))
        * Fraction(b**b, factorial(b))
    )


def h_function(g: int, mu, h) -> HFunction:
    """H_g(mu) = |Aut(mu)| h_{g,mu} / r(g,mu)!."""
    mu = partition(mu)
    value = h.value if isinstance(h, HurwitzValue) else Fraction(h)
    return HFunction(g, mu, aut_order(mu) * value / factorial(rh_count(g, mu)))


class OracleTable:
    """Memoized H_g(mu) lookups backed by the enumeration oracle."""

    def __init__(self, budget: int = DEFAULT_BUDGET, workers: int = 1):
        self.budget = budget
        self.workers = workers
        self._h: Dict[Tuple[int, Partition], Fraction] = {}

    def h(self, g: int, mu) -> Fraction:
        mu = partition(mu)
        key = (g, mu)
        if key not in self._h:
            self._h[key] = hurwitz_oracle(g, mu, self.budget, workers=self.workers).value
        return self._h[key]

    def H(self, g: int, mu) -> Fraction:
        if g < 0:
            return Fraction(0)
        return h_function(g, mu, self.h(g, mu)).value

    __call__ = H


@dataclass
class CutJoinResult:
    g: int
    mu: Partition
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    infeasible: Optional[str] = None
    terms: Dict[str, Fraction] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.infeasible is None and self.lhs == self.rhs

    @property
    def residual(self) -> Optional[Fraction]:
        if self.infeasible is not None:
            return None
        return self.lhs - self.rhs


def cut_and_join_verify(
    g: int,
    mu,
    H: Callable[[int, Partition], Fraction],
    split: str = "index",
) -> CutJoinResult:
    """Check r H_g(mu) = cut + join + split-join exactly.

    ``H(g, mu)`` must return H_g(mu) (zero for negative genus) or raise
    OracleInfeasible.  ``split`` selects how nu_1 u nu_2 = mu(i) is summed:
    "index" ranges over subsets of the remaining pole labels (each multiset
    split counted prod C(m_k, j_k) times), "multiset" counts each multiset
    split once.
    """
    mu = partition(mu)
    res = CutJoinResult(g, mu)
    ell = len(mu)
    try:
        lhs = rh_count(g, mu) * H(g, mu)
        join = Fraction(0)
        for i, j in combinations(range(ell), 2):
            join += (mu[i] + mu[j]) * H(g, join_parts(mu, i, j))
        cut_genus = Fraction(0)
        cut_split = Fraction(0)
        for i in range(ell):
            rest = remove_part(mu, i)
            if split == "index":
                splits = [
                    (tuple(rest[k] for k in J), tuple(rest[k] for k in K), 1)
                    for J, K in index_splits(range(len(rest)))
                ]
            elif split == "multiset":
                splits = [(a, b, 1) for a, b, _ in sub_multisets(rest)]
            else:
                raise ValueError(f"unknown split mode {split!r}")
            for alpha in range(1, mu[i]):
                beta = mu[i] - alpha
                w = alpha * beta
                cut_genus += w * H(g - 1, partition(rest + (alpha, beta)))
                for nu1, nu2, mult in splits:
                    for g1 in range(g + 1):
                        cut_split += (
                            w
                            * mult
                            * H(g1, partition(nu1 + (alpha,)))
                            * H(g - g1, partition(nu2 + (beta,)))
                        )
    except OracleInfeasible as exc:
        res.infeasible = str(exc)
        return res
    res.terms = {"join": join, "cut_genus": cut_genus / 2, "cut_split": cut_split / 2}
    res.lhs = lhs
    res.rhs = join + (cut_genus + cut_split) / 2
    return res
