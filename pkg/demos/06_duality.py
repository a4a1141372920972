# Opposite and dual lattices.
#
# theta(x) = x - lat(x)/m (1, ..., 1) maps L(k, m, n) isometrically onto
# L(k, n - m, n). The dual lattice is generated by e^1..e^n (dual to the
# standard basis) and e^0 = (e^1 + ... + e^n)/m.

from fractions import Fraction

from checkerboard import LatticeParams, det_lattice, inner
from checkerboard.core import gram_matrix
from checkerboard.duality import dual_generators, opposite_params, theta, z_vector
from checkerboard.exactla import smith_normal_form

p = LatticeParams(3, 2, 7)
q = opposite_params(p)
x, y = [1, 1, 0, 0, 0, 0, 0], [2, -1, 1, 0, 0, 0, 0]
print(f"{p}: (x|y) = {inner(p, x, y)};  {q}: (theta x|theta y) = {inner(q, theta(p, x), theta(p, y))}")

e0 = dual_generators(p)[0]
print("e^0 =", [str(c) for c in e0])
print("(x|e^0) =", inner(p, x, e0), "= lat(x)/m =", Fraction(sum(x), p.m))

# z_j pairs with e_i to det * delta_ij, so z_j/det is the dual vector e^j
print("z_7 =", list(z_vector(p, 7)), " det =", det_lattice(p))

# the discriminant group L*/L has order |det|
factors = smith_normal_form(gram_matrix(p)).invariant_factors
print("invariant factors of the Gram matrix:", factors)
