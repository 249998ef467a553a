"""The polynomials xi_n(t) and the xi basis.

Run: python demos/01_xi_polynomials.py
"""
from fractions import Fraction

from hodge_recursion.exact import double_factorial
from hodge_recursion.xi import a_sequence, from_xi_basis, to_xi_basis, xi

# xi_0 = t - 1 and each further one is t^2 (t-1) d/dt of the previous
for n in range(4):
    print(f"xi_{n}(t) =", xi(n))

# the top coefficient is (2n-1)!!, the bottom term (-1)^n n! t^(n+1)
n = 6
p = xi(n)
print("\nxi_6 leading coefficient:", p.coeff((13,)), "=", double_factorial(11))
print("xi_6 lowest term:", p.coeff((7,)), "* t^7")
print("t^(n+2) coefficients a_n:", a_sequence(8))

# any product of xi's converts back to its coefficient map
expansion = {(2, 0): Fraction(1, 24), (1, 1): Fraction(1, 24), (0, 2): Fraction(1, 24)}
poly = from_xi_basis(expansion)
print("\npolynomial has", len(poly), "monomials; back to xi basis:", to_xi_basis(poly))
