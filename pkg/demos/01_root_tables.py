"""Roots of L(2, m, n), shell by shell.

A vector of L(k, m, n) is an integer vector whose coordinate sum (its
latitude) is a multiple of m. Its squared norm is x.x + lat(x)^2 (k - m)/m^2,
so for a fixed latitude the norm only depends on the multiset of coordinates.
That multiset is the "shape" and every shape is counted by a multinomial.
"""

from checkerboard import LatticeParams
from checkerboard.roots import root_table, shell_table

# E6, E7, E8 sit in the m = 3 series
for n in (6, 7, 8):
    table = root_table(LatticeParams(2, 3, n))
    print(f"L(2,3,{n}):")
    print(table.to_markdown())

# A_n and D_n have three shells each; the totals follow n(n+1) and 2n(n-1)
for n in (4, 9):
    a = root_table(LatticeParams(2, 1, n)).total
    d = root_table(LatticeParams(2, 2, n)).total
    print(f"n={n}: A has {a} roots, D has {d} roots")

# shells of higher norm work the same way; E8 has 2160 vectors of norm 4
print("E8 norm-4 shell:", shell_table(LatticeParams(2, 3, 8), 4).total)
