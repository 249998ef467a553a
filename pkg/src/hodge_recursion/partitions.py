"""Partitions, their automorphism groups and the cut/join surgeries.

Indices into a partition are 0-based.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from math import factorial
from typing import Iterable, Iterator, List, Tuple

__all__ = [
    "Partition",
    "partition",
    "multiplicities",
    "aut_order",
    "rh_count",
    "join_parts",
    "split_part",
    "remove_part",
    "enumerate_partitions",
    "enumerate_tuples",
    "sub_multisets",
    "index_splits",
    "format_partition",
]

Partition = Tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def multiplicities(mu: Partition) -> Counter:
    return Counter(mu)


def aut_order(mu: Partition) -> int:
    out = 1
    for m in Counter(mu).values():
        out *= factorial(m)
    return out


def rh_count(g: int, mu: Partition) -> int:
    """Number of simple branch points, 2g - 2 + l(mu) + |mu|."""
    if not mu:
        raise ValueError("rh_count needs a nonempty partition")
    r = 2 * g - 2 + len(mu) + sum(mu)
    if r < 0:
        raise ValueError(f"negative branch-point count for g={g}, mu={mu}")
    return r


def _check_index(mu: Partition, i: int):
    if not 0 <= i < len(mu):
        raise IndexError(f"part index {i} out of range for {mu}")


def remove_part(mu: Partition, i: int) -> Partition:
    _check_index(mu, i)
    return mu[:i] + mu[i + 1 :]


def join_parts(mu: Partition, i: int, j: int) -> Partition:
    _check_index(mu, i)
    _check_index(mu, j)
    if i == j:
        raise ValueError("join needs two distinct parts")
    rest = [p for k, p in enumerate(mu) if k not in (i, j)]
    return partition(rest + [mu[i] + mu[j]])


def split_part(mu: Partition, i: int, alpha: int, beta: int) -> Partition:
    _check_index(mu, i)
    if alpha < 1 or beta < 1 or alpha + beta != mu[i]:
        raise ValueError(f"cannot split part {mu[i]} into {alpha} + {beta}")
    return partition(remove_part(mu, i) + (alpha, beta))


def enumerate_partitions(size: int, length: int | None = None) -> List[Partition]:
    """Partitions of ``size`` (optionally of fixed length), reverse-lex order."""
    if size < 0:
        raise ValueError("size must be >= 0")

    def rec(n: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for tail in rec(n - first, first):
                yield (first,) + tail

    out = list(rec(size, size))
    if length is not None:
        out = [p for p in out if len(p) == length]
    return out


def enumerate_tuples(ell: int, part_max: int) -> List[Tuple[int, ...]]:
    """All vectors in {1..part_max}^ell, lexicographic."""
    if ell < 1 or part_max < 1:
        raise ValueError("bounds must be >= 1")
    return list(product(range(1, part_max + 1), repeat=ell))


def sub_multisets(nu: Partition) -> List[Tuple[Partition, Partition, int]]:
    """Multiset splits nu = nu1 u nu2 with the number of index subsets giving each.

    One entry per choice of how many copies of each distinct part go to nu1
    (prod (m_k + 1) entries); the weight is prod C(m_k, j_k).
    """
    from math import comb

    mult = sorted(Counter(nu).items(), reverse=True)
    out = []
    for choice in product(*(range(m + 1) for _, m in mult)):
        nu1, nu2, w = [], [], 1
        for (part, m), j in zip(mult, choice):
            nu1 += [part] * j
            nu2 += [part] * (m - j)
            w *= comb(m, j)
        out.append((tuple(nu1), tuple(nu2), w))
    return out


def index_splits(indices: Iterable[int]) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All ordered set splits J u K of ``indices``."""
    indices = tuple(indices)
    n = len(indices)
    for mask in range(1 << n):
        J = tuple(indices[k] for k in range(n) if mask >> k & 1)
        K = tuple(indices[k] for k in range(n) if not mask >> k & 1)
        yield J, K


def format_partition(mu: Partition) -> str:
    return "(" + ",".join(str(p) for p in mu) + ")"
