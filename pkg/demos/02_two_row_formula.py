"""The closed form for two-row tableaux, checked three ways.

f(n, k, i) is the maj generating function over standard Young tableaux of
shape (n-k, k) with exactly i descents.  We compare the product formula
with the recursive decomposition and with direct enumeration, then sum over
shapes to recover the 321-avoider polynomials A(n, i).
"""

from majdes import Shape
from majdes.formulas import a_polynomial, f_two_row, f_two_row_recurrence
from majdes.tableaux import frt_multiplicity, maj_distribution_by_descents

n = 8
for k in range(1, n // 2 + 1):
    oracle = maj_distribution_by_descents(Shape((n - k, k)))
    for i in range(1, k + 1):
        p = f_two_row(n, k, i)
        agree = p == f_two_row_recurrence(n, k, i) == oracle[i]
        print(f"f({n},{k},{i}) = {p}    [recurrence and enumeration agree: {agree}]")

print()
for i in range(n // 2 + 1):
    terms = " + ".join(f"{frt_multiplicity(n, k)}*f({n},{k},{i})" for k in (range(i, n // 2 + 1) if i else [0]))
    print(f"A({n},{i}) = {terms}")
    print(f"        = {a_polynomial(n, i)}")
