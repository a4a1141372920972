"""Recognising L(k, m, n) from a lattice with a primitive A_{n-1} sublattice.

Input is a Gram matrix ``G`` on some basis ``b_1..b_n`` of ``L`` and the
coordinates (rows) of simple roots ``alpha_1..alpha_{n-1}`` of a primitive
sublattice ``M`` of type A_{n-1}. The roots are taken in the order of
``e_1 - e_2, ..., e_{n-1} - e_n``: reversing them swaps ``m`` with ``n - m``.

:func:`recognize` produces ``beta`` in ``L`` with ``L = Z beta + M``,
``(beta | alpha_i) = delta_{i,m}`` and ``(beta | beta) = k``; the basis
``alpha_1..alpha_{n-1}, beta`` then has the Gram matrix of L(k, m, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from . import exactla
from .core import LatticeParams, normalize_params


class RecognitionError(ValueError):
    pass


class NotCartanA(RecognitionError):
    pass


class NotPrimitive(RecognitionError):
    pass


class KernelRankNotOne(RecognitionError):
    pass


class InternalInconsistency(ArithmeticError):
    """A step that is integral by theory was not; indicates a bug."""


@dataclass(frozen=True)
class AbstractLattice:
    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram: Sequence[Sequence[int]]):
        G = tuple(tuple(int(a) for a in row) for row in gram)
        n = len(G)
        if any(len(r) != n for r in G):
            raise ValueError("Gram matrix must be square")
        if any(G[i][j] != G[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", G)

    @property
    def n(self) -> int:
        return len(self.gram)

    def pair(self, x: Sequence, y: Sequence):
        return exactla.dot(exactla.vecmat(x, self.gram), y)


@dataclass(frozen=True)
class SublatticeEmbedding:
    """Rows are the simple roots of M in the coordinates of the lattice basis."""

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __init__(self, rows: Sequence[Sequence[int]], n: Optional[int] = None):
        R = tuple(tuple(int(a) for a in r) for r in rows)
        if n is None:
            if not R:
                raise ValueError("n is required for an empty embedding")
            n = len(R[0])
        if any(len(r) != n for r in R):
            raise ValueError(f"rows must have length {n}")
        if len(R) != n - 1:
            raise ValueError(f"need {n - 1} rows, got {len(R)}")
        object.__setattr__(self, "rows", R)
        object.__setattr__(self, "n", n)


@dataclass(frozen=True)
class RecognitionResult:
    k: int
    m: int
    transform: tuple[tuple[int, ...], ...]
    normalized: Optional[LatticeParams] = None

    @property
    def params(self) -> LatticeParams:
        return LatticeParams(self.k, self.m, len(self.transform))

    def to_dict(self) -> dict:
        doc = {"k": self.k, "m": self.m, "U": [list(r) for r in self.transform]}
        if self.normalized is not None:
            doc["normalized"] = list(self.normalized)
        return doc


def cartan_a(r: int) -> list[list[int]]:
    """Cartan matrix of A_r."""
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)]
            for i in range(r)]


def target_gram(k: int, m: int, n: int) -> list[list[int]]:
    """Gram of L(k, m, n) on ``e_1 - e_2, ..., e_{n-1} - e_n, e_1 + ... + e_m``."""
    G = cartan_a(n - 1)
    for i in range(n - 1):
        G[i].append(1 if i == m - 1 else 0)
    G.append([1 if i == m - 1 else 0 for i in range(n - 1)] + [k])
    return G


def _check_embedding(L: AbstractLattice, S: SublatticeEmbedding) -> list[list[int]]:
    if S.n != L.n:
        raise ValueError(f"embedding rank {S.n} != lattice rank {L.n}")
    SG = exactla.matmul(S.rows, L.gram) if S.rows else []
    if S.rows and exactla.matmul(SG, exactla.transpose(S.rows)) != cartan_a(L.n - 1):
        raise NotCartanA("the rows do not have the A_{n-1} Cartan Gram matrix")
    if S.rows:
        snf = exactla.smith_normal_form(S.rows)
        if any(f != 1 for f in snf.invariant_factors):
            raise NotPrimitive(f"invariant factors {snf.invariant_factors}")
    return SG


def annihilator(L: AbstractLattice, S: SublatticeEmbedding) -> list[int]:
    """Generator ``nu`` of the vectors orthogonal to M (first nonzero entry
    positive)."""
    SG = _check_embedding(L, S)
    ker = exactla.integer_kernel(SG, cols=L.n)
    if len(ker) != 1:
        raise KernelRankNotOne(f"orthogonal complement has rank {len(ker)}")
    nu = ker[0]
    if next(a for a in nu if a) < 0:
        nu = [-a for a in nu]
    return nu


def quotient_order(L: AbstractLattice, S: SublatticeEmbedding,
                   nu: Sequence[int]) -> int:
    """Index of ``M + M^perp`` in ``L``."""
    return abs(exactla.det_bareiss([list(r) for r in S.rows] + [list(nu)]))


def _weight_coords(n: int, t: Sequence[int]) -> list[Fraction]:
    """Coordinates in the simple roots of the A_{n-1} weight with
    ``(w | alpha_i) = t_i``; uses ``(C^-1)_ij = min(i, j) - i j / n``."""
    r = n - 1
    out = []
    for i in range(1, r + 1):
        s = 0
        for j in range(1, r + 1):
            s += (n * min(i, j) - i * j) * t[j - 1]
        out.append(Fraction(s, n))
    return out


def recognize(L: AbstractLattice, S: SublatticeEmbedding,
              normalize: bool = False) -> RecognitionResult:
    n = L.n
    nu = annihilator(L, S)
    # Both m and n - m are valid answers (the opposite map fixes M). The
    # construction below yields beta with M^perp-part nu/d; orienting nu by
    # its last nonzero coordinate makes the basis of target_gram a fixed point.
    if next(a for a in reversed(nu) if a) < 0:
        nu = [-a for a in nu]
    alphas = [list(r) for r in S.rows]
    stack = alphas + [nu]
    d = quotient_order(L, S, nu)
    if d == 0 or n % d:
        raise InternalInconsistency(f"index {d} does not divide {n}")

    if d == 1:
        beta = nu
        m = n
    else:
        # generator of L / (M + M^perp): last row of V^-1 in the Smith form
        snf = exactla.smith_normal_form(stack)
        if snf.invariant_factors[-1] != d or any(f != 1 for f in snf.invariant_factors[:-1]):
            raise InternalInconsistency(f"quotient is not cyclic of order {d}")
        lam = exactla.unimodular_inverse(snf.V)[-1]

        pairings = [L.pair(lam, a) for a in alphas]            # (lam | alpha_i)
        lam_M = _weight_coords(n, pairings)                      # in alpha basis
        lam_M_vec = exactla.vecmat(lam_M, alphas)
        perp = [Fraction(x) - y for x, y in zip(lam, lam_M_vec)]
        i0 = next(i for i, a in enumerate(nu) if a)
        ratio = perp[i0] / nu[i0]
        if any(perp[i] != ratio * nu[i] for i in range(n)):
            raise InternalInconsistency("projection is not a multiple of nu")
        if ratio.denominator != d:
            raise InternalInconsistency(f"projection {ratio} has wrong order")
        c = ratio.numerator
        a, b = _ext_gcd(c, d)

        t = [a * x for x in pairings]
        m = sum(i * ti for i, ti in enumerate(t, start=1)) % n
        if m == 0 or n // gcd(m, n) != d:
            raise InternalInconsistency(f"weight class {m} does not have order {d}")
        # mu = varpi_m - a lam_M, an element of M
        target = [int(i == m) - ti for i, ti in enumerate(t, start=1)]
        mu = _weight_coords(n, target)
        if any(x.denominator != 1 for x in mu):
            raise InternalInconsistency("mu is not in M")
        mu_vec = exactla.vecmat([int(x) for x in mu], alphas)
        beta = [a * x + y + b * z for x, y, z in zip(lam, mu_vec, nu)]

    k = L.pair(beta, beta)
    U = tuple(tuple(r) for r in alphas + [beta])
    res = RecognitionResult(int(k), m, U,
                            normalize_params(LatticeParams(int(k), m, n)) if normalize else None)
    if not certify(L, S, res):
        raise InternalInconsistency("recognition result failed certification")
    return res


def _ext_gcd(c: int, d: int) -> tuple[int, int]:
    """``(a, b)`` with ``a c + b d == 1`` (requires gcd 1)."""
    old_r, r = c, d
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r < 0:
        old_r, old_s = -old_r, -old_s
    if old_r != 1:
        raise InternalInconsistency(f"gcd({c}, {d}) = {old_r}")
    return old_s, (1 - old_s * c) // d


def certify(L: AbstractLattice, S: SublatticeEmbedding, r: RecognitionResult) -> bool:
    """Independent check of a :class:`RecognitionResult` against the input."""
    n = L.n
    U = [list(row) for row in r.transform]
    if len(U) != n or any(len(row) != n for row in U):
        return False
    if not 1 <= r.m <= n:
        return False
    if [tuple(row) for row in U[:-1]] != list(S.rows):
        return False
    if abs(exactla.det_bareiss(U)) != 1:
        return False
    G = exactla.matmul(exactla.matmul(U, L.gram), exactla.transpose(U))
    return G == target_gram(r.k, r.m, n)


# --------------------------------------------------------------------------
# helpers for building inputs

def natural_embedding(n: int) -> list[list[int]]:
    """Roots ``e_i - e_{i+1}`` in the basis of :func:`target_gram` (identity rows)."""
    return [[int(i == j) for j in range(n)] for i in range(n - 1)]


def rebase(G: Sequence[Sequence[int]], S: Sequence[Sequence[int]],
           R: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Change basis by the unimodular ``R`` (new basis vectors = rows of
    ``R`` in old coordinates); returns the new Gram and transported rows."""
    G2 = exactla.matmul(exactla.matmul(R, G), exactla.transpose(R))
    Rinv = exactla.unimodular_inverse(R)
    S2 = exactla.matmul(S, Rinv) if S else []
    return G2, S2
