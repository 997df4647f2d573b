"""A maj-raising bijection from (m, k, 1) tableaux to (m+1, k+1) tableaux.

Restricted to tableaux with two descents, the map adds exactly one to the
major index.  Here it is on every such tableau of shape (3, 2, 1).
"""

from majdes import Shape
from majdes.formulas import mk1_bijection, mk1_bijection_inverse
from majdes.tableaux import enumerate_syt, tableau_statistics

for T in enumerate_syt(Shape((3, 2, 1))):
    if tableau_statistics(T).des != 2:
        continue
    S = mk1_bijection(T)
    back = mk1_bijection_inverse(S)
    print(f"{str(T):>14}  maj {tableau_statistics(T).maj:2d}  ->  {str(S):>14}  maj {tableau_statistics(S).maj:2d}"
          f"   inverse ok: {back == T}")
