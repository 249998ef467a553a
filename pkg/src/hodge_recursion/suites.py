"""Verification sweeps shared by the command line and the test suite.

Each sweep returns a :class:`SuiteResult` whose rows are emitted in a fixed
order, so serialized output is byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .dvv import check_lambda_g, check_top_degree, check_top_degree_monomials
from .exact import b_closed_form, b_coefficients
from .hurwitz import DEFAULT_BUDGET, OracleInfeasible, OracleTable, cut_and_join_verify
from .lambert import lambert_report
from .partitions import enumerate_partitions, format_partition, rh_count
from .recursion import HodgeEngine, HodgeTable, elsv_evaluate, extract_hodge, keys_up_to, stable

__all__ = [
    "CheckRow",
    "SuiteResult",
    "cumulative_table",
    "hurwitz_cases",
    "suite_caj",
    "suite_cross",
    "suite_dvv",
    "suite_lambda_g",
    "suite_dual",
    "suite_lambert",
]


@dataclass
class CheckRow:
    label: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"label": self.label, "ok": self.ok, **self.detail}


@dataclass
class SuiteResult:
    check: str
    rows: List[CheckRow] = field(default_factory=list)
    infeasible: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def exit_code(self) -> int:
        if not self.ok:
            return 1
        return 3 if self.infeasible else 0

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "ok": self.ok,
            "rows": [r.to_json() for r in self.rows],
            "infeasible": list(self.infeasible),
        }


def cumulative_table(engine: HodgeEngine, keys: Iterable[Tuple[int, int]]) -> HodgeTable:
    table = HodgeTable()
    for g, ell in sorted(set(keys)):
        if stable(g, ell):
            table.update(extract_hodge(g, ell, engine.H(g, ell)))
    return table


def hurwitz_cases(gmax: int, dmax: int, rmax: Optional[int] = None) -> List[Tuple[int, Tuple[int, ...]]]:
    """(g, mu) with g <= gmax, |mu| <= dmax and r(g, mu) <= rmax, in a fixed order."""
    out = []
    for g in range(gmax + 1):
        for d in range(1, dmax + 1):
            for mu in enumerate_partitions(d):
                if rmax is None or rh_count(g, mu) <= rmax:
                    out.append((g, mu))
    return out


def suite_caj(
    gmax: int,
    dmax: int,
    rmax: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    split: str = "index",
) -> SuiteResult:
    oracle = OracleTable(budget=budget, workers=workers)
    res = SuiteResult("caj")
    for g, mu in hurwitz_cases(gmax, dmax, rmax):
        label = f"g={g} mu={format_partition(mu)}"
        cj = cut_and_join_verify(g, mu, oracle, split=split)
        if cj.infeasible is not None:
            res.infeasible.append(label)
            continue
        res.rows.append(CheckRow(label, cj.ok, {"lhs": str(cj.lhs), "rhs": str(cj.rhs)}))
    return res


def suite_cross(
    gmax: int,
    dmax: int,
    rmax: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    engine: Optional[HodgeEngine] = None,
) -> SuiteResult:
    """ELSV evaluation of recursion output against the enumeration oracle."""
    engine = engine or HodgeEngine()
    oracle = OracleTable(budget=budget)
    cases = hurwitz_cases(gmax, dmax, rmax)
    table = cumulative_table(engine, {(g, len(mu)) for g, mu in cases})
    res = SuiteResult("cross")
    for g, mu in cases:
        label = f"g={g} mu={format_partition(mu)}"
        try:
            expected = oracle.h(g, mu)
        except OracleInfeasible:
            res.infeasible.append(label)
            continue
        actual = elsv_evaluate(g, mu, table).value
        res.rows.append(CheckRow(label, actual == expected, {"oracle": str(expected), "elsv": str(actual)}))
    return res


def suite_dvv(max_euler: int, engine: Optional[HodgeEngine] = None) -> SuiteResult:
    engine = engine or HodgeEngine()
    res = SuiteResult("dvv")
    for g, ell in keys_up_to(max_euler):
        h = engine.H(g, ell)
        bad = check_top_degree(g, ell, h) + check_top_degree_monomials(g, ell, h)
        res.rows.append(
            CheckRow(f"g={g} l={ell}", not bad, {"mismatches": [m.to_json() for m in bad]})
        )
    return res


def suite_lambda_g(gmax: int, lmax: int = 3, engine: Optional[HodgeEngine] = None) -> SuiteResult:
    """b_g from series inversion vs Bernoulli, then the lambda_g relations per key."""
    engine = engine or HodgeEngine()
    res = SuiteResult("lambda-g")
    b = b_coefficients(gmax)
    for g in range(1, gmax + 1):
        closed = b_closed_form(g)
        res.rows.append(CheckRow(f"b_{g}", b[g] == closed, {"series": str(b[g]), "bernoulli": str(closed)}))
    keys = [(g, ell) for g in range(1, gmax + 1) for ell in range(1, lmax + 1)]
    table = cumulative_table(engine, keys)
    for g, ell in keys:
        bad = check_lambda_g(g, ell, table, b)
        res.rows.append(CheckRow(f"g={g} l={ell}", not bad, {"mismatches": [m.to_json() for m in bad]}))
    return res


def suite_dual(max_euler: int, engine: Optional[HodgeEngine] = None) -> SuiteResult:
    """The two forms of the right-hand side must give identical H."""
    main = engine or HodgeEngine()
    alt = HodgeEngine(form="alt")
    res = SuiteResult("dual")
    for g, ell in keys_up_to(max_euler):
        a, b = main.H(g, ell), alt.H(g, ell)
        # report the difference as raw monomials; it need not lie in the xi span
        diff = (a - b).sorted_terms()
        res.rows.append(
            CheckRow(
                f"g={g} l={ell}",
                a == b,
                {"diff": [{"exponents": list(e), "value": str(v)} for e, v in diff]},
            )
        )
    return res


def suite_lambert(n_max: int = 4, ws: Sequence[float] = (0.5, 1.0, 2.0)) -> SuiteResult:
    report = lambert_report(n_max, ws)
    res = SuiteResult("lambert")
    for kind in sorted(report):
        for i, row in enumerate(report[kind]):
            detail = {k: v for k, v in row.items() if k != "ok"}
            res.rows.append(CheckRow(f"{kind}[{i}]", row["ok"], detail))
    return res

