"""Weyl group orders without a single closed formula.

Take z = (m - 2)(1, ..., 1) + det(L) e_n in L(2, m, n). Its stabiliser in the
Weyl group is the Weyl group of the rank n - 1 member of the same series, so

    |W(X_n)| = |orbit of z| * |W(X_{n-1})|.

The orbit is found by closing {z} under reflections in all roots.
"""

from collections import Counter

from checkerboard import LatticeParams
from checkerboard.roots import ShapeSignature, orbit, weyl_chain, weyl_order, z_root_vector

for name, m, n in [("A7", 1, 7), ("D6", 2, 6), ("E6", 3, 6), ("E7", 3, 7), ("E8", 3, 8)]:
    p = LatticeParams(2, m, n)
    chain = " * ".join(str(c) for _, c in weyl_chain(p))
    print(f"|W({name})| = {chain} = {weyl_order(p)}")

# The E6 orbit of z splits into three shapes of sizes 6, 15 and 6.
p = LatticeParams(2, 3, 6)
shapes = Counter(str(ShapeSignature.of(v)) for v in orbit(p, z_root_vector(p)))
for shape, count in shapes.items():
    print(f"  {shape:>12}: {count}")
