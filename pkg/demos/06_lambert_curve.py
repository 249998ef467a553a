"""The Laplace-transform layer on the Lambert curve, in floating point.

Run: python demos/06_lambert_curve.py
"""
import numpy as np

from hodge_recursion.lambert import (
    h01_constant,
    h02_series,
    lambert_point,
    t_of_w,
    unstable_eval,
    w_of_t,
    xi_series_check,
)

ws = np.array([0.5, 1.0, 2.0, 5.0])
for w in ws:
    pt = lambert_point(w)
    print(f"w={w}: t={pt.t:.15f}  |x - y e^-y| = {pt.residual:.1e}  w(t) - w = {w_of_t(pt.t) - w:.1e}")

# the defining series of xi_n agrees with the polynomial
errs = np.array([[xi_series_check(n, w).rel_error for w in ws[:3]] for n in range(5)])
print("\nrelative errors, rows n = 0..4, columns w = 0.5, 1, 2:")
print(errs)

# the unstable pieces: a constant c and a logarithm
c = h01_constant()
print(f"\nc = {c.value:.12f} (+ at most {c.tail_bound:.1e}; exactly 1/2)")
for w1, w2 in ((1.0, 1.5), (0.5, 2.0)):
    t1, t2 = t_of_w(w1).value, t_of_w(w2).value
    print(f"H_0,2 at w=({w1},{w2}): series {h02_series(w1, w2):.15f}  closed {unstable_eval('H02', t1, t2):.15f}")
