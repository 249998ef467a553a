"""Hurwitz numbers from recursion output via ELSV, against the oracle.

Run: python demos/04_elsv_cross_check.py
"""
from hodge_recursion.hurwitz import hurwitz_oracle
from hodge_recursion.recursion import HodgeEngine, elsv_evaluate
from hodge_recursion.suites import cumulative_table, hurwitz_cases

engine = HodgeEngine()
cases = hurwitz_cases(gmax=3, dmax=4, rmax=7)
table = cumulative_table(engine, {(g, len(mu)) for g, mu in cases})

agree = 0
for g, mu in cases:
    a = elsv_evaluate(g, mu, table).value
    b = hurwitz_oracle(g, mu).value
    agree += a == b
    print(f"g={g} mu={mu}: elsv {a}  oracle {b}")
print(f"\n{agree}/{len(cases)} agree")
