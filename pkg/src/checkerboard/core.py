"""Parameters, vectors and the bilinear form of the lattices L(k, m, n).

``L(k, m, n)`` is the set of integer vectors of length ``n`` whose
coordinate sum (the *latitude*) is divisible by ``m``, with the form

    (x | y) = x . y + lat(x) lat(y) (k - m) / m**2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, TextIO

from . import exactla


class DimensionMismatch(ValueError):
    """A vector length does not match the rank of the lattice."""


@dataclass(frozen=True, order=True)
class LatticeParams:
    k: int
    m: int
    n: int

    def __post_init__(self):
        for name in ("k", "m", "n"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an int")
        if self.m == 0:
            raise ValueError("m must be nonzero")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    def __iter__(self):
        return iter((self.k, self.m, self.n))

    def __str__(self):
        return f"L({self.k},{self.m},{self.n})"


@dataclass(frozen=True)
class LatticeVector(Sequence[int]):
    """An integer coordinate vector; ``latitude`` is the coordinate sum."""

    coords: tuple[int, ...]
    latitude: int = field(init=False, compare=False)

    def __init__(self, coords: Iterable[int]):
        coords = tuple(coords)
        for c in coords:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coordinate {c}")
            elif not isinstance(c, int):
                raise TypeError(f"coordinate {c!r} is not an integer")
        coords = tuple(int(c) for c in coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "latitude", sum(coords))

    @classmethod
    def basis(cls, n: int, i: int) -> "LatticeVector":
        """The standard basis vector e_i (1-based)."""
        return cls(int(j == i - 1) for j in range(n))

    @classmethod
    def indicator(cls, n: int, points: Iterable[int]) -> "LatticeVector":
        """Sum of e_i over the (1-based) points."""
        pts = set(points)
        return cls(int(j + 1 in pts) for j in range(n))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __add__(self, other):
        return LatticeVector(a + b for a, b in zip(self, _checked(other, len(self))))

    def __sub__(self, other):
        return LatticeVector(a - b for a, b in zip(self, _checked(other, len(self))))

    def __neg__(self):
        return LatticeVector(-a for a in self)

    def __rmul__(self, c: int):
        return LatticeVector(c * a for a in self)

    def __repr__(self):
        return f"LatticeVector({list(self.coords)})"


def _checked(v: Sequence, n: int) -> Sequence:
    if len(v) != n:
        raise DimensionMismatch(f"expected length {n}, got {len(v)}")
    return v


def _exact(q: Fraction) -> int | Fraction:
    return q.numerator if q.denominator == 1 else q


def latitude(v: Sequence) -> int | Fraction:
    if isinstance(v, LatticeVector):
        return v.latitude
    return sum(v)


def contains(p: LatticeParams, v: Sequence) -> bool:
    _checked(v, p.n)
    if any(not exactla._is_int(c) for c in v):
        return False
    return latitude(v) % p.m == 0


def inner(p: LatticeParams, x: Sequence, y: Sequence) -> int | Fraction:
    """The form ``(x|y)`` for vectors with integer or rational entries.

    Returns an ``int`` whenever the value is integral, which is always the
    case for two lattice members.
    """
    _checked(x, p.n)
    _checked(y, p.n)
    k, m, _ = p
    lx, ly = latitude(x), latitude(y)
    num = m * m * exactla.dot(x, y) + lx * ly * (k - m)
    return _exact(Fraction(num, 1) / (m * m))


def norm(p: LatticeParams, x: Sequence) -> int | Fraction:
    return inner(p, x, x)


def form_matrix(p: LatticeParams) -> list[list[Fraction]]:
    """The matrix ``I + (k - m)/m**2 J`` of the form on the ambient space."""
    k, m, n = p
    c = Fraction(k - m, m * m)
    return [[(1 if i == j else 0) + c for j in range(n)] for i in range(n)]


def lattice_basis(p: LatticeParams) -> list[list[int]]:
    """Rows ``m e_1, e_2 - e_1, ..., e_n - e_{n-1}`` spanning L(k, m, n)."""
    n = p.n
    rows = [[p.m if j == 0 else 0 for j in range(n)]]
    for i in range(1, n):
        row = [0] * n
        row[i], row[i - 1] = 1, -1
        rows.append(row)
    return rows


def gram_matrix(p: LatticeParams) -> list[list[int]]:
    """Gram matrix on :func:`lattice_basis`: an A_{n-1} Cartan block with the
    corner ``m**2 - m + k`` coupled to it by ``-m``."""
    k, m, n = p
    G = exactla.zeros(n, n)
    G[0][0] = m * m - m + k
    if n > 1:
        G[0][1] = G[1][0] = -m
    for i in range(1, n):
        G[i][i] = 2
        if i + 1 < n:
            G[i][i + 1] = G[i + 1][i] = -1
    return G


def det_lattice(p: LatticeParams) -> int:
    k, m, n = p
    return m * m - m * n + k * n


def signature(p: LatticeParams) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` inertia of the form on L(k, m, n).

    Read off from the sign of the determinant and confirmed by an exact
    congruence diagonalisation of the Gram matrix.
    """
    d = det_lattice(p)
    n = p.n
    if d > 0:
        sig = (n, 0, 0)
    elif d == 0:
        sig = (n - 1, 0, 1)
    else:
        sig = (n - 1, 1, 0)
    diag = exactla.inertia(gram_matrix(p))
    if diag != sig:
        raise ArithmeticError(f"signature mismatch for {p}: {sig} vs {diag}")
    return sig


def is_even(p: LatticeParams) -> bool:
    return p.k % 2 == 0


def normalize_params(p: LatticeParams) -> LatticeParams:
    """Canonical parameters of an isometric lattice.

    Uses ``L(k, m, n) = L(k - 2m, -m, n)`` and the opposite isometry
    ``L(k, m, n) ~ L(k, n - m, n)`` to reach ``1 <= m <= n`` and then, unless
    ``m == n``, ``m <= n - m``.
    """
    k, m, n = p
    while not 1 <= m <= n:
        if m < 0:
            k, m = k - 2 * m, -m
        else:
            # m > n: the opposite lattice has negative m
            m = n - m
    if m < n and m > n - m:
        m = n - m
    return LatticeParams(k, m, n)


def coset_representative(p: LatticeParams, h: int) -> LatticeVector:
    """A fixed vector of latitude ``h`` (``h`` must be a multiple of ``m``)."""
    k, m, n = p
    if h % m:
        raise ValueError(f"latitude {h} is not divisible by m={m}")
    if 1 <= m <= n:
        c = h // m
        return LatticeVector(c if i < m else 0 for i in range(n))
    return LatticeVector(h if i == 0 else 0 for i in range(n))


# --------------------------------------------------------------------------
# Gram-matrix text format

def format_gram(G: Sequence[Sequence[int]], comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(len(G)))
    lines.extend(" ".join(str(a) for a in row) for row in G)
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_gram(text: str) -> list[list[int]]:
    """Parse the Gram text format: ``n`` then ``n`` rows of ``n`` integers."""
    lines = _data_lines(text)
    if not lines:
        raise ValueError("empty Gram matrix file")
    n = int(lines[0])
    rows = [[int(t) for t in line.split()] for line in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} integers")
    return rows


def parse_rows(text: str, width: int | None = None) -> list[list[int]]:
    """Parse whitespace separated integer rows (sublattice and vector files)."""
    rows = [[int(t) for t in line.split()] for line in _data_lines(text)]
    if width is not None and any(len(r) != width for r in rows):
        raise ValueError(f"every row must have {width} entries")
    return rows


def read_gram(fp: TextIO) -> list[list[int]]:
    return parse_gram(fp.read())
