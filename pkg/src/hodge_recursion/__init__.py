"""Exact linear Hodge integrals and simple Hurwitz numbers.

The generating functions H_{g,l} are symmetric polynomials computed by a
recursion on the Euler characteristic; every output is cross-checked against
independent sources (transposition enumeration, cut-and-join, DVV, the
lambda_g formula and the Lambert-curve series).
"""
from .dvv import check_lambda_g, check_top_degree, check_top_degree_monomials, psi_intersection
from .exact import b_closed_form, b_coefficients, bernoulli_numbers, double_factorial, multinomial
from .hurwitz import (
    HurwitzValue,
    OracleInfeasible,
    OracleTable,
    cut_and_join_verify,
    h_function,
    hurwitz_closed_form,
    hurwitz_oracle,
)
from .partitions import aut_order, enumerate_partitions, partition, rh_count
from .polynomial import MultiPoly, NotDivisibleError
from .recursion import HodgeEngine, HodgeTable, elsv_evaluate, extract_hodge, keys_up_to
from .xi import a_sequence, from_xi_basis, to_xi_basis, xi

__version__ = "0.1.0"
