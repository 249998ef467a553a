"""The two ends of H_{g,l}: psi integrals on top, lambda_g integrals at the bottom.

Run: python demos/05_dvv_and_lambda_g.py
"""
from hodge_recursion.dvv import check_lambda_g, check_top_degree, psi_intersection
from hodge_recursion.exact import b_closed_form, b_coefficients
from hodge_recursion.recursion import HodgeEngine, keys_up_to
from hodge_recursion.suites import cumulative_table

print("<tau_4>_2 =", psi_intersection(2, (4,)))
print("<tau_2 tau_3>_2 =", psi_intersection(2, (2, 3)))
print("<tau_7>_3 =", psi_intersection(3, (7,)))

engine = HodgeEngine()
for g, ell in keys_up_to(4):
    print(f"top degree of H_{g},{ell} vs DVV:", "ok" if not check_top_degree(g, ell, engine.H(g, ell)) else "MISMATCH")

# b_g two ways: inverting the sinc series, and Bernoulli numbers
b = b_coefficients(4)
print("\nb_g:", [str(x) for x in b])
print("Bernoulli:", [str(b_closed_form(g)) for g in range(5)])

keys = [(g, ell) for g in (1, 2) for ell in (1, 2, 3)]
table = cumulative_table(engine, keys)
for g, ell in keys:
    print(f"lambda_g relations at ({g},{ell}):", check_lambda_g(g, ell, table, b) or "ok")
