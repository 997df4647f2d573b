"""Major index over descents for pattern-avoiding permutations and tableaux."""

from majdes.formulas import (
    a_polynomial, catalan_top_term, f_three_row, f_three_row_recurrence, f_two_row,
    f_two_row_recurrence, related_distribution,
)
from majdes.perm import BivariatePolynomial, Permutation, distribution
from majdes.qpoly import QPolynomial, q_binomial, shape_report
from majdes.tableaux import Shape, StandardYoungTableau, enumerate_syt, stanley_maj_gf

__version__ = "0.1.0"
