# Which L(k, m, n) are positive-definite and unimodular?
#
# det L(k, m, n) = m^2 - m n + k n. Setting it to 1 pins k down for each m,
# and a nonnegative pair p = m - k, q = n - k - m with p q = k^2 - 1 certifies
# positive-definiteness.

from checkerboard import LatticeParams, det_lattice, signature
from checkerboard.classify import enumerate_unimodular, known_names, unimodular_witness
from checkerboard.roots import root_table

for n in (8, 16, 24):
    print(f"even unimodular, rank {n}:")
    for p in enumerate_unimodular(n, even_only=True):
        w = unimodular_witness(p)
        print(f"  {p}  det={det_lattice(p)}  p,q={w.p},{w.q}  {', '.join(known_names(p))}")

# The rank-24 ones are Niemeier lattices; their roots give the root systems.
for k, m in [(4, 5), (6, 11)]:
    p = LatticeParams(k, m, 24)
    print(f"{p} has {root_table(p).total} roots")

# Off the positive-definite range the determinant changes sign.
for k in range(1, 4):
    flat = LatticeParams(k, k + 1, (k + 1) ** 2)
    hyper = LatticeParams(k, k + 1, k * k + 2 * k + 2)
    print(f"{flat}: det {det_lattice(flat)}, signature {signature(flat)};"
          f" {hyper}: det {det_lattice(hyper)}, signature {signature(hyper)}")
