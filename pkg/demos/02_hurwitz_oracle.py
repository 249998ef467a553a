"""Hurwitz numbers by enumerating transposition factorizations.

Run: python demos/02_hurwitz_oracle.py
"""
import time

from hodge_recursion.hurwitz import OracleInfeasible, OracleTable, cut_and_join_verify, hurwitz_closed_form, hurwitz_oracle
from hodge_recursion.partitions import enumerate_partitions, rh_count

# genus 0 with one pole: k^(k-3)
for k in range(1, 5):
    print(f"h_0,({k}) =", hurwitz_oracle(0, (k,)).value, " closed form:", hurwitz_closed_form(0, (k,)).value)

# every profile of degree 4 in genus 0 and 1
for g in (0, 1):
    for mu in enumerate_partitions(4):
        t0 = time.perf_counter()
        v = hurwitz_oracle(g, mu)
        print(f"h_{g},{mu} = {v.value}  (r = {rh_count(g, mu)}, {time.perf_counter() - t0:.3f}s)")

# the enumeration refuses to run past its leaf budget
try:
    hurwitz_oracle(2, (3, 3))
except OracleInfeasible as exc:
    print("\n", exc)

# cut-and-join holds exactly with oracle values on both sides
oracle = OracleTable()
res = cut_and_join_verify(1, (2, 1, 1), oracle)
print("\ncut-and-join at g=1, mu=(2,1,1):", res.lhs, "=", res.rhs, res.terms)
