"""Sparse multivariate polynomials over the rationals.

Variables are indexed from 0.  A polynomial of arity ``l`` lives in
Q[t_0, ..., t_{l-1}]; exponent vectors are tuples of length ``l``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

Exponents = Tuple[int, ...]

__all__ = ["MultiPoly", "NotDivisibleError", "grlex_key"]


class NotDivisibleError(ArithmeticError):
    """A divided difference left a nonzero remainder."""


def grlex_key(e: Exponents):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Exponents, object] | Iterable = ()):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.arity = arity
        clean: Dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != arity or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for arity {arity}")
            c = Fraction(c)
            if c:
                c = clean.get(e, 0) + c
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self._terms = clean

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Exponents, Fraction]) -> "MultiPoly":
        # trusted constructor: terms already pruned and validated
        p = cls.__new__(cls)
        p.arity = arity
        p._terms = terms
        return p

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, arity: int, c) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def variable(cls, arity: int, i: int) -> "MultiPoly":
        e = [0] * arity
        e[i] = 1
        return cls._raw(arity, {tuple(e): Fraction(1)})

    @classmethod
    def univariate(cls, coeffs: Sequence) -> "MultiPoly":
        """Arity-1 polynomial from ascending coefficients."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.arity, {e: c for e, c in self._terms.items() if sum(e) == d})

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.arity, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    # -- ring operations -------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.arity, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly.zero(self.arity)
        return MultiPoly._raw(self.arity, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._raw(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        out = MultiPoly.constant(self.arity, 1)
        for _ in range(k):
            out = out * self
        return out

    def mul_monomial(self, e: Sequence[int], c=1) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly.zero(self.arity)
        return MultiPoly._raw(
            self.arity,
            {tuple(a + b for a, b in zip(k, e)): v * c for k, v in self._terms.items()},
        )

    # -- calculus --------------------------------------------------------

    def _index(self, i: int) -> int:
        if not 0 <= i < self.arity:
            raise IndexError(f"variable index {i} out of range for arity {self.arity}")
        return i

    def derivative(self, i: int) -> "MultiPoly":
        i = self._index(i)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MultiPoly._raw(self.arity, out)

    def apply_D(self, i: int) -> "MultiPoly":
        """t_i^2 (t_i - 1) d/dt_i."""
        i = self._index(i)
        out: Dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            k = e[i]
            if not k:
                continue
            # t^2 (t-1) k t^(k-1) = k t^(k+2) - k t^(k+1)
            for shift, sign in ((2, 1), (1, -1)):
                f = list(e)
                f[i] = k + shift
                f = tuple(f)
                v = out.get(f, 0) + sign * k * c
                if v:
                    out[f] = v
                else:
                    out.pop(f, None)
        return MultiPoly._raw(self.arity, out)

    def euler_shift(self, i: int) -> "MultiPoly":
        """(t_i^2 - t_i) d/dt_i, i.e. t_i^{-1} D_i."""
        return self.apply_D(i).divide_by_variable(i)

    def divide_by_variable(self, i: int) -> "MultiPoly":
        i = self._index(i)
        out = {}
        for e, c in self._terms.items():
            if not e[i]:
                raise NotDivisibleError(f"term {e} not divisible by t_{i}")
            f = list(e)
            f[i] -= 1
            out[tuple(f)] = c
        return MultiPoly._raw(self.arity, out)

    def divided_difference(self, i: int, j: int) -> "MultiPoly":
        """Exact quotient p / (t_i - t_j); raises NotDivisibleError on a remainder."""
        i, j = self._index(i), self._index(j)
        if i == j:
            raise ValueError("divided difference needs distinct indices")
        work = dict(self._terms)
        quotient: Dict[Exponents, Fraction] = {}
        top = max((e[i] for e in work), default=0)
        for a in range(top, 0, -1):
            for e in [e for e in work if e[i] == a]:
                c = work.pop(e)
                q = list(e)
                q[i] -= 1
                quotient[tuple(q)] = quotient.get(tuple(q), 0) + c
                # p - c t^q (t_i - t_j) leaves + c t^q t_j
                q[j] += 1
                q = tuple(q)
                v = work.get(q, 0) + c
                if v:
                    work[q] = v
                else:
                    work.pop(q, None)
        if work:
            raise NotDivisibleError(
                f"nonzero remainder dividing by (t_{i} - t_{j}): {len(work)} terms"
            )
        return MultiPoly._raw(self.arity, {e: c for e, c in quotient.items() if c})

    # -- variable maps ---------------------------------------------------

    def remap(self, targets: Sequence[int], arity: int) -> "MultiPoly":
        """Send variable a to variable targets[a] of a polynomial of the given arity.

        Several variables may share a target (diagonal substitution u1=u2=t).
        """
        if len(targets) != self.arity:
            raise ValueError("need one target per variable")
        out: Dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            f = [0] * arity
            for a, k in enumerate(e):
                f[targets[a]] += k
            f = tuple(f)
            v = out.get(f, 0) + c
            if v:
                out[f] = v
            else:
                out.pop(f, None)
        return MultiPoly._raw(arity, out)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        return self.remap(perm, self.arity)

    def is_symmetric(self) -> bool:
        for k in range(self.arity - 1):
            perm = list(range(self.arity))
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
            if self.permute(perm) != self:
                return False
        return True

    def symmetrize(self) -> "MultiPoly":
        """Average over all variable permutations (for tests on small arity)."""
        acc = MultiPoly.zero(self.arity)
        perms = list(permutations(range(self.arity)))
        for p in perms:
            acc = acc + self.permute(p)
        return acc.scale(Fraction(1, len(perms)))

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point: Sequence):
        if len(point) != self.arity:
            raise ValueError(f"point has {len(point)} coordinates, arity is {self.arity}")
        is_float = any(isinstance(x, float) for x in point)
        pts = [float(x) for x in point] if is_float else [Fraction(x) for x in point]
        if not self._terms:
            return 0.0 if is_float else Fraction(0)
        powers = []
        for a in range(self.arity):
            top = max(e[a] for e in self._terms)
            pw = [1.0 if is_float else Fraction(1)]
            for _ in range(top):
                pw.append(pw[-1] * pts[a])
            powers.append(pw)
        total = 0.0 if is_float else Fraction(0)
        for e, c in self._terms.items():
            term = float(c) if is_float else c
            for a, k in enumerate(e):
                if k:
                    term = term * powers[a][k]
            total += term
        return total

    # -- text / JSON -----------------------------------------------------

    def _var(self, a: int) -> str:
        return "t" if self.arity == 1 else f"t{a + 1}"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [str(c)]
            for a, k in enumerate(e):
                if k == 1:
                    factors.append(self._var(a))
                elif k > 1:
                    factors.append(f"{self._var(a)}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {self.to_text()!r})"

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, arity: int, data: list) -> "MultiPoly":
        from .exact import parse_rational

        return cls(arity, [(tuple(d["exponents"]), parse_rational(d["coeff"])) for d in data])
