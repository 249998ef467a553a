"""Computing H_{g,l} by the recursion and reading off Hodge integrals.

Run: python demos/03_recursion_table.py
"""
import time

from hodge_recursion.recursion import HodgeEngine, extract_hodge, keys_up_to

engine = HodgeEngine()
for g, ell in keys_up_to(4):
    t0 = time.perf_counter()
    h = engine.H(g, ell)
    print(f"H_{g},{ell}: degree {h.total_degree()}, {len(h)} monomials, {time.perf_counter() - t0:.2f}s")

# the xi-expansion coefficients are the integrals <tau_n Lambda^v(1)>
print("\nH_1,1 =", engine.H(1, 1))
tab = extract_hodge(2, 1, engine.H(2, 1))
for g, ell, n, j, v in tab.rows():
    print(f"<tau_{n[0]} lambda_{j}>_{g},{ell} = {v}")

# the cache stores the xi-expansions; a reload recomputes nothing
engine.save("/tmp/hodge_cache.json")
again = HodgeEngine(cache_path="/tmp/hodge_cache.json")
again.H(2, 2)
print("\nreloaded, recomputed keys:", again.computed)
