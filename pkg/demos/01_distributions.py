"""Joint (maj, des) distributions over length-3 avoidance classes.

For each pattern we enumerate the avoiders of S_5 and print the bivariate
generating function sum q^maj t^des.  The 123, 213, 231 and 312 classes can
also be derived from the 321 and 132 ones; we show both routes agree.
"""

from majdes import Permutation, distribution
from majdes.formulas import related_distribution
from majdes.qpoly import shape_report

n = 5
for pattern in ("321", "132", "123", "231", "213", "312"):
    F = distribution(n, Permutation.parse(pattern))
    print(f"F_{pattern},{n} = {F}")

print()
for pattern in ("123", "231", "213", "312"):
    same = related_distribution(pattern, n) == distribution(n, Permutation.parse(pattern))
    print(f"derived {pattern} matches enumeration: {same}")

# the 321 coefficients are palindromic and unimodal; the 132 ones are not
print()
for pattern in ("321", "132"):
    F = distribution(7, Permutation.parse(pattern))
    for i, g in sorted(F.terms.items()):
        r = shape_report(g)
        print(f"n=7 {pattern} t^{i}: symmetric={r.symmetric} unimodal={r.unimodal}")
