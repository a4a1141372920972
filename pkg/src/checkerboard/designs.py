"""Symmetric designs, Hadamard matrices and orthogonal frames.

A block ``I`` (an ``m``-subset of ``{1..n}``) gives the vector ``e_I`` of
latitude ``m`` in L(k, m, n), and ``(e_I | e_J) = |I & J| + k - m``. So the
blocks of a symmetric 2-(n, m, lam) design give an orthogonal frame of
squared norm ``m - lam`` in L(m - lam, m, n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import LatticeParams, LatticeVector, contains, inner
from .roots import enumerate_roots


class DesignError(ValueError):
    pass


class BlockCountMismatch(DesignError):
    pass


class BlockSizeMismatch(DesignError):
    pass


class IntersectionNotConstant(DesignError):
    pass


class NotHadamard(ValueError):
    pass


class FrameError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricDesign:
    """Point count ``n`` and blocks of points in ``1..n`` (stored sorted)."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in blocks))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "blocks": [list(b) for b in self.blocks]},
                          sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SymmetricDesign":
        doc = json.loads(text)
        return cls(int(doc["n"]), doc["blocks"])


def verify_design(d: SymmetricDesign) -> tuple[int, int, int]:
    """Return ``(n, m, lam)`` or raise the first violated condition."""
    n = d.n
    for b in d.blocks:
        if len(set(b)) != len(b) or any(not 1 <= x <= n for x in b):
            raise DesignError(f"block {b} is not a subset of 1..{n}")
    if len(d.blocks) != n:
        raise BlockCountMismatch(f"{len(d.blocks)} blocks on {n} points")
    sizes = {len(b) for b in d.blocks}
    if len(sizes) != 1:
        raise BlockSizeMismatch(f"block sizes {sorted(sizes)}")
    sets = [set(b) for b in d.blocks]
    lams = {len(sets[i] & sets[j]) for i in range(n) for j in range(i + 1, n)}
    if len(lams) > 1:
        raise IntersectionNotConstant(f"intersection sizes {sorted(lams)}")
    m = sizes.pop()
    # with a single block any lam is consistent; report the only sensible one
    lam = lams.pop() if lams else m
    return n, m, lam


def fano() -> SymmetricDesign:
    return SymmetricDesign(7, [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6),
                               (2, 5, 7), (3, 4, 7), (3, 5, 6)])


def complement_design(d: SymmetricDesign) -> SymmetricDesign:
    verify_design(d)
    points = set(range(1, d.n + 1))
    return SymmetricDesign(d.n, [points - set(b) for b in d.blocks])


# --------------------------------------------------------------------------
# Hadamard matrices

def sylvester_hadamard(t: int) -> list[list[int]]:
    """Order ``2**t`` Hadamard matrix ``[[H, H], [H, -H]]``."""
    if t < 1:
        raise ValueError("t must be at least 1")
    H = [[1]]
    for _ in range(t):
        H = [row + row for row in H] + [row + [-x for x in row] for row in H]
    return H


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def paley_hadamard(q: int) -> list[list[int]]:
    """Paley's order ``q + 1`` Hadamard matrix for a prime ``q = 3 mod 4``."""
    if not _is_prime(q) or q % 4 != 3:
        raise ValueError(f"q={q} must be a prime congruent to 3 mod 4")

    def chi(a: int) -> int:
        a %= q
        if a == 0:
            return 0
        return 1 if pow(a, (q - 1) // 2, q) == 1 else -1

    N = q + 1
    # skew matrix S = [[0, 1...], [-1..., Q]] with Jacobsthal Q; H = I + S
    S = [[0] * N for _ in range(N)]
    for j in range(1, N):
        S[0][j] = 1
        S[j][0] = -1
    for i in range(q):
        for j in range(q):
            S[i + 1][j + 1] = chi(j - i)
    return [[S[i][j] + (i == j) for j in range(N)] for i in range(N)]


def is_hadamard(H: Sequence[Sequence[int]]) -> bool:
    N = len(H)
    if any(len(r) != N or any(x not in (1, -1) for x in r) for r in H):
        return False
    return all(sum(a * b for a, b in zip(H[i], H[j])) == (N if i == j else 0)
               for i in range(N) for j in range(i, N))


def normalize_hadamard(H: Sequence[Sequence[int]]) -> list[list[int]]:
    """Flip column signs to make row 0 positive, then row signs for column 0."""
    cols = [row[:] for row in H]
    signs = cols[0][:]
    cols = [[x * s for x, s in zip(row, signs)] for row in cols]
    return [row if row[0] == 1 else [-x for x in row] for row in cols]


def design_from_hadamard(H: Sequence[Sequence[int]]) -> SymmetricDesign:
    """The 2-(4k-1, 2k-1, k-1) design of the normalised core of ``H``."""
    N = len(H)
    if N < 4 or N % 4 or not is_hadamard(H):
        raise NotHadamard(f"not a Hadamard matrix of order 4k (order {N})")
    Hn = normalize_hadamard(H)
    blocks = [[j for j in range(1, N) if row[j] == 1] for row in Hn[1:]]
    return SymmetricDesign(N - 1, blocks)


# --------------------------------------------------------------------------
# frames

@dataclass(frozen=True)
class Frame:
    """``n`` vectors of L(k, m, n), pairwise orthogonal with squared norm ``norm``."""

    params: LatticeParams
    vectors: tuple[LatticeVector, ...]
    norm: int

    def gram(self) -> list[list[int]]:
        return [[inner(self.params, u, v) for v in self.vectors] for u in self.vectors]

    def vectors_text(self) -> str:
        return "".join(" ".join(map(str, v)) + "\n" for v in self.vectors)


@dataclass(frozen=True)
class FrameCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_frame(f: Frame) -> FrameCheck:
    p = f.params
    if len(f.vectors) != p.n:
        return FrameCheck(False, f"expected {p.n} vectors, got {len(f.vectors)}")
    for i, v in enumerate(f.vectors):
        if len(v) != p.n:
            return FrameCheck(False, f"vector {i} has length {len(v)}")
        if not contains(p, v):
            return FrameCheck(False, f"vector {i} is not in {p}")
    for i, u in enumerate(f.vectors):
        for j in range(i, p.n):
            want = f.norm if i == j else 0
            got = inner(p, u, f.vectors[j])
            if got != want:
                return FrameCheck(False, f"(v{i}|v{j}) = {got}, expected {want}")
    return FrameCheck(True)


def frame_from_design(d: SymmetricDesign) -> Frame:
    n, m, lam = verify_design(d)
    if not 1 <= m <= n - 1:
        raise FrameError(f"block size {m} must lie in 1..{n - 1}")
    k = m - lam
    if k <= 0:
        raise FrameError(f"k = m - lam = {k} is not positive")
    vecs = tuple(LatticeVector.indicator(n, b) for b in d.blocks)
    return Frame(LatticeParams(k, m, n), vecs, k)


def dplus_frame(k: int) -> Frame:
    """Orthogonal 2-frame of L(k, 2k - 1, 4k), the lattice D+ of rank 4k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 4 * k
    vecs = []
    for i in range(1, 2 * k + 1):
        vecs.append(LatticeVector.indicator(n, set(range(1, n + 1)) - {2 * i - 1, 2 * i}))
    for i in range(1, 2 * k + 1):
        vecs.append(LatticeVector.basis(n, 2 * i - 1) - LatticeVector.basis(n, 2 * i))
    return Frame(LatticeParams(k, 2 * k - 1, n), tuple(vecs), 2)


def dn_frame(n: int) -> Frame:
    """``e_1 +- e_2, ..., e_{n-1} +- e_n`` in L(2, 2, n) = D_n."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    vecs = []
    for i in range(1, n, 2):
        a, b = LatticeVector.basis(n, i), LatticeVector.basis(n, i + 1)
        vecs.extend([a + b, a - b])
    return Frame(LatticeParams(2, 2, n), tuple(vecs), 2)


def e8_frame() -> Frame:
    """Fano frame of E7 inside L(2, 3, 8) plus the root orthogonal to it.

    The completing root is found by search; exactly one pair ``+-r``
    exists and the lexicographically larger one is used.
    """
    p = LatticeParams(2, 3, 8)
    base = [LatticeVector.indicator(8, b) for b in fano().blocks]
    found = [r for r in enumerate_roots(p)
             if all(inner(p, r, v) == 0 for v in base)]
    if len(found) != 2:
        raise ArithmeticError(f"expected one +-pair of roots, found {len(found)}")
    last = max(found, key=lambda r: r.coords)
    return Frame(p, tuple(base) + (last,), 2)
