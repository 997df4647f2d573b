"""Tableau machinery: hook lengths, the q-hook formula, RSK, lattice paths."""

from majdes import Permutation, Shape, StandardYoungTableau
from majdes.tableaux import (
    frt_count, hook_lengths, rsk, stanley_maj_gf, syt_to_lattice_path, tableau_statistics,
)

shape = Shape((4, 2, 2, 1))
print("hooks of", shape, "=", hook_lengths(shape))
print("number of SYT:", frt_count(shape))
print("maj generating function:", stanley_maj_gf(shape))

sigma = Permutation.parse("31425")
P, Q = rsk(sigma)
print()
print(f"RSK({sigma}): P = {P}, Q = {Q}")
print("descents of sigma and of Q:", tableau_statistics(Q).descent_set)

T = StandardYoungTableau.parse("1,2,4,7,8,9,10,11,12,14/3,5,6,13")
path = syt_to_lattice_path(T)
print()
print(f"{T} -> {path}")
print("peak positions sum to maj:", sum(path.peaks) == tableau_statistics(T).maj)
