"""Recognising L(k, m, n) from a Gram matrix.

Start from E8 on a scrambled basis, together with the simple roots of an A7
sublattice written in that basis. recognize() finds beta with
(beta | alpha_i) = delta_{i,m} and (beta | beta) = k, which exhibits the
lattice as L(k, m, 8).
"""

import random

from checkerboard import recognition
from checkerboard.exactla import identity, matmul

rng = random.Random(1)
n = 8
R = identity(n)
for _ in range(25):
    i, j = rng.sample(range(n), 2)
    c = rng.choice((-1, 1))
    R[i] = [a + c * b for a, b in zip(R[i], R[j])]

G, S = recognition.rebase(recognition.target_gram(2, 3, n),
                          recognition.natural_embedding(n), R)
print("scrambled Gram, first row:", G[0])

L = recognition.AbstractLattice(G)
E = recognition.SublatticeEmbedding(S, n=n)
result = recognition.recognize(L, E, normalize=True)
print(f"recognised k={result.k}, m={result.m}; normalised {result.normalized}")

U = [list(r) for r in result.transform]
print("U G U^T is the target Gram:",
      matmul(matmul(U, G), [list(c) for c in zip(*U)])
      == recognition.target_gram(result.k, result.m, n))
print("certified:", recognition.certify(L, E, result))

# A_7 + <5> has M + M^perp = L, so the answer is (5, 8).
G = recognition.cartan_a(n - 1)
for row in G:
    row.append(0)
G.append([0] * (n - 1) + [5])
natural = recognition.SublatticeEmbedding(recognition.natural_embedding(n), n=n)
r = recognition.recognize(recognition.AbstractLattice(G), natural)
print("A7 + <5> ->", (r.k, r.m))
