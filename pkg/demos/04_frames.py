"""Orthogonal frames from block designs.

The blocks of a symmetric 2-(n, m, lam) design, read as 0/1 vectors, are
pairwise orthogonal of squared norm m - lam in L(m - lam, m, n). Hadamard
matrices supply such designs in every order 4k - 1 they exist for.
"""

from checkerboard import designs

fano = designs.fano()
frame = designs.frame_from_design(fano)
print("Fano plane blocks:", fano.blocks)
print(f"frame in {frame.params}, Gram = {frame.norm} * I:",
      frame.gram() == [[frame.norm * (i == j) for j in range(7)] for i in range(7)])

for t in (3, 4, 5):
    H = designs.sylvester_hadamard(t)
    f = designs.frame_from_design(designs.design_from_hadamard(H))
    print(f"Sylvester order {2 ** t}: frame of norm {f.norm} in {f.params}",
          bool(designs.verify_frame(f)))

f = designs.frame_from_design(designs.design_from_hadamard(designs.paley_hadamard(19)))
print(f"Paley q=19: frame of norm {f.norm} in {f.params}", bool(designs.verify_frame(f)))

# E8 takes the seven Fano vectors plus one root orthogonal to all of them.
e8 = designs.e8_frame()
print("E8 frame completes with", tuple(e8.vectors[-1]))

# A frame with one vector nudged no longer checks out, and says why.
bad = designs.Frame(e8.params, (e8.vectors[0] + e8.vectors[1],) + e8.vectors[1:], 2)
print("perturbed:", designs.verify_frame(bad).reason)
