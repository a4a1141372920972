"""Vectors of given norm, root tables and Weyl group orders.

Vectors are grouped by latitude and by *shape*: the multiset of their
coordinates, written like ``(-1)^1 1^1``. All vectors of one shape share
latitude and norm, so counts are multinomial coefficients.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial, isqrt
from typing import Iterator, Optional, Sequence

from . import exactla
from .classify import classify_root_lattice
from .core import LatticeParams, LatticeVector, det_lattice, inner, lattice_basis


class IndefiniteWithoutBound(ValueError):
    """Norm shells of a non positive-definite lattice need a latitude bound."""


class RankTooLarge(ValueError):
    """Explicit enumeration refused to avoid combinatorial blowup."""


class NotARoot(ValueError):
    pass


class NotARootLattice(ValueError):
    pass


@dataclass(frozen=True)
class ShapeSignature:
    """Counts ``j -> d_j`` of the nonzero coordinate values of a vector."""

    counts: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self):
        if any(j == 0 or d < 1 for j, d in self.counts):
            raise ValueError(f"bad shape counts {self.counts}")
        if sum(d for _, d in self.counts) > self.n:
            raise ValueError("shape has more entries than the rank")

    @classmethod
    def from_dict(cls, counts: dict[int, int], n: int) -> "ShapeSignature":
        return cls(tuple(sorted((j, d) for j, d in counts.items() if d)), n)

    @classmethod
    def of(cls, v: Sequence[int]) -> "ShapeSignature":
        counts: dict[int, int] = {}
        for x in v:
            if x:
                counts[x] = counts.get(x, 0) + 1
        return cls.from_dict(counts, len(v))

    @property
    def zeros(self) -> int:
        return self.n - sum(d for _, d in self.counts)

    @property
    def latitude(self) -> int:
        return sum(j * d for j, d in self.counts)

    @property
    def square_sum(self) -> int:
        return sum(j * j * d for j, d in self.counts)

    def multiplicity(self) -> int:
        """Number of distinct vectors with this shape."""
        out = factorial(self.n) // factorial(self.zeros)
        for _, d in self.counts:
            out //= factorial(d)
        return out

    def as_dict(self) -> dict[str, int]:
        return {str(j): d for j, d in self.counts}

    def vectors(self) -> Iterator[LatticeVector]:
        """Every vector of this shape, in a deterministic order."""
        def place(idx: int, free: tuple[int, ...], coords: list[int]):
            if idx == len(self.counts):
                yield LatticeVector(coords)
                return
            j, d = self.counts[idx]
            for pos in combinations(free, d):
                for i in pos:
                    coords[i] = j
                chosen = set(pos)
                yield from place(idx + 1, tuple(i for i in free if i not in chosen),
                                 coords)
                for i in pos:
                    coords[i] = 0

        yield from place(0, tuple(range(self.n)), [0] * self.n)

    def __str__(self) -> str:
        parts = [f"({j})^{d}" if j < 0 else f"{j}^{d}" for j, d in self.counts]
        return " ".join(parts) if parts else "0"


def _shapes(total: int, squares: int, slots: int) -> list[dict[int, int]]:
    """Multisets of nonzero integers with given sum, sum of squares and at
    most ``slots`` members."""
    top = isqrt(max(squares, 0))
    # largest magnitudes first so that |j| bounds everything still to come
    values = [s * j for j in range(top, 0, -1) for s in (1, -1)]
    out: list[dict[int, int]] = []

    def rec(i: int, rem_sum: int, rem_sq: int, rem_slots: int, acc: dict):
        if rem_sq == 0:
            if rem_sum == 0:
                out.append(dict(acc))
            return
        if i == len(values) or rem_slots == 0:
            return
        j = values[i]
        sq = j * j
        # j == j*j mod 2; Cauchy-Schwarz over the free slots; magnitude cap
        if ((rem_sum - rem_sq) % 2 or rem_sum * rem_sum > rem_slots * rem_sq
                or rem_sq > rem_slots * sq):
            return
        for d in range(min(rem_slots, rem_sq // sq), -1, -1):
            if d:
                acc[j] = d
            rec(i + 1, rem_sum - j * d, rem_sq - sq * d, rem_slots - d, acc)
            acc.pop(j, None)

    rec(0, total, squares, slots, {})
    return out


def shapes_of_norm(p: LatticeParams, N: int, h: int
                   ) -> list[tuple[ShapeSignature, int]]:
    """Shapes of the vectors of L(k, m, n) with norm ``N`` and latitude ``h*m``.

    Such a vector has coordinate square sum ``N - h**2 (k - m)``.
    """
    if N < 0:
        raise ValueError("norm must be nonnegative")
    k, m, n = p
    lat = h * m
    S = N - h * h * (k - m)
    # Cauchy-Schwarz: lat**2 <= n * S
    if S < 0 or lat * lat > n * S:
        return []
    shapes = [ShapeSignature.from_dict(c, n) for c in _shapes(lat, S, n)]
    shapes.sort(key=lambda s: s.counts)
    return [(s, s.multiplicity()) for s in shapes]


@dataclass(frozen=True)
class ShellRow:
    latitude: int
    shape: ShapeSignature
    count: int


@dataclass(frozen=True)
class ShellTable:
    params: LatticeParams
    norm: int
    rows: tuple[ShellRow, ...]
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", sum(r.count for r in self.rows))

    def to_markdown(self) -> str:
        lines = ["| latitude | shape | number |", "|---:|:---|---:|"]
        for r in self.rows:
            lines.append(f"| {r.latitude} | {r.shape} | {r.count} |")
        lines.append(f"| | total | {self.total} |")
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [{"latitude": r.latitude, "shape": r.shape.as_dict(), "count": r.count}
                for r in self.rows]

    def to_json(self) -> str:
        doc = {"params": list(self.params), "norm": self.norm,
               "rows": self.to_records(), "total": self.total}
        return json.dumps(doc, sort_keys=True)

    def to_csv(self) -> str:
        lines = ["latitude,shape,count"]
        lines.extend(f"{r.latitude},{r.shape},{r.count}" for r in self.rows)
        return "\n".join(lines) + "\n"


def latitude_range(p: LatticeParams, N: int = 2,
                   latitude_bound: Optional[int] = None) -> list[int]:
    """Multipliers ``h`` (latitude ``h*m``) that can carry vectors of norm ``N``.

    For a positive-definite lattice Cauchy-Schwarz gives
    ``h**2 * det(L) <= n * N``. Otherwise a bound on ``|latitude|`` is needed.
    """
    d = det_lattice(p)
    if latitude_bound is not None:
        hmax = abs(latitude_bound) // abs(p.m)
    elif d > 0:
        hmax = isqrt(p.n * N // d)
    else:
        raise IndefiniteWithoutBound(f"{p} is not positive-definite")
    return list(range(hmax, -hmax - 1, -1))


def shell_table(p: LatticeParams, N: int,
                latitude_bound: Optional[int] = None) -> ShellTable:
    rows = []
    for h in latitude_range(p, N, latitude_bound):
        for shape, count in shapes_of_norm(p, N, h):
            rows.append(ShellRow(h * p.m, shape, count))
    rows.sort(key=lambda r: -r.latitude)
    return ShellTable(p, N, tuple(rows))


def root_table(p: LatticeParams, latitude_bound: Optional[int] = None) -> ShellTable:
    """Norm-2 vectors grouped by latitude (descending) and shape."""
    return shell_table(p, 2, latitude_bound)


def enumerate_roots(p: LatticeParams, latitude_bound: Optional[int] = None,
                    max_rank: int = 16) -> list[LatticeVector]:
    """All roots as explicit vectors.

    An empty table is returned at any rank; nonempty tables are only
    expanded up to ``max_rank``.
    """
    table = root_table(p, latitude_bound)
    if table.total and p.n > max_rank:
        raise RankTooLarge(f"rank {p.n} > {max_rank}")
    out = []
    for row in table.rows:
        out.extend(row.shape.vectors())
    return out


def reflect(p: LatticeParams, alpha: Sequence[int], v: Sequence[int]) -> LatticeVector:
    """Reflection of ``v`` in the hyperplane orthogonal to the root ``alpha``."""
    if inner(p, alpha, alpha) != 2:
        raise NotARoot(f"{alpha} does not have norm 2")
    c = inner(p, v, alpha)
    return LatticeVector(x - c * a for x, a in zip(v, alpha))


# --------------------------------------------------------------------------
# Weyl groups

_SERIES = {"A": 1, "D": 2, "E": 3}


def z_root_vector(p: LatticeParams) -> LatticeVector:
    """``(m - 2)(e_1 + ... + e_n) + det(L) e_n``."""
    d = det_lattice(p)
    return LatticeVector((p.m - 2) + (d if i == p.n - 1 else 0) for i in range(p.n))


class _Reflector:
    """Integer-only reflections in a fixed root list of L(k, m, n)."""

    def __init__(self, p: LatticeParams, roots: Sequence[LatticeVector]):
        k, m, _ = p
        self.m2 = m * m
        self.km = k - m
        self.roots = [(tuple(r), r.latitude) for r in roots]

    def images(self, v: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        lv = sum(v)
        for r, lr in self.roots:
            num = self.m2 * sum(a * b for a, b in zip(v, r)) + lv * lr * self.km
            c, rem = divmod(num, self.m2)
            if rem:
                raise ArithmeticError("non-integral pairing with a root")
            if c:
                yield tuple(a - c * b for a, b in zip(v, r))


def orbit(p: LatticeParams, v: Sequence[int],
          roots: Optional[Sequence[LatticeVector]] = None) -> list[LatticeVector]:
    """Closure of ``{v}`` under all root reflections (breadth first)."""
    if roots is None:
        roots = enumerate_roots(p)
    refl = _Reflector(p, roots)
    start = tuple(v)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in refl.images(u):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return [LatticeVector(u) for u in order]


def _family_params(p: LatticeParams) -> tuple[str, int]:
    label = classify_root_lattice(p)
    if not label:
        raise NotARootLattice(f"{p} is not a root lattice")
    return label.family, label.rank


def weyl_orbit_size(p: LatticeParams) -> int:
    """Size ``c_n`` of the Weyl orbit of ``z_n`` in L(2, m, n).

    ``p`` is used as given (not normalised) so that the chain
    L(2, m, n) > L(2, m, n - 1) > ... stays inside one series.
    """
    if p.k != 2 or det_lattice(p) <= 0:
        raise NotARootLattice(f"{p} is not a positive-definite L(2, m, n)")
    _family_params(p)
    return len(orbit(p, z_root_vector(p)))


def weyl_chain(p: LatticeParams) -> list[tuple[LatticeParams, int]]:
    """Orbit sizes along the series, top down, ending at the seed.

    The final entry is the seed order: ``|W(A_1)| = 2`` (itself an orbit
    size), ``|W(D_2)| = 4`` and ``|W(E_3)| = 12``.
    """
    family, n = _family_params(p)
    if family == "A+A1":
        chain = weyl_chain(LatticeParams(2, 1, n - 1)) if n > 1 else []
        return chain + [(LatticeParams(2, 1, 1), 2)]
    m = _SERIES[family]
    floor = {"A": 1, "D": 3, "E": 4}[family]
    chain = []
    for j in range(n, floor - 1, -1):
        q = LatticeParams(2, m, j)
        chain.append((q, weyl_orbit_size(q)))
    if family == "D":
        chain.append((LatticeParams(2, 2, 2), 4))
    elif family == "E":
        chain.append((LatticeParams(2, 3, 3), 12))
    return chain


def weyl_order(p: LatticeParams) -> int:
    """``|W|`` as the product of the orbit sizes in :func:`weyl_chain`."""
    out = 1
    for _, c in weyl_chain(p):
        out *= c
    return out


def roots_span_lattice(p: LatticeParams) -> bool:
    """Whether the roots generate L(k, m, n) (Hermite forms agree)."""
    roots = [list(r) for r in enumerate_roots(p)]
    if not roots:
        return False
    H_roots, _ = exactla.hermite_normal_form(roots)
    H_lat, _ = exactla.hermite_normal_form(lattice_basis(p))
    return [r for r in H_roots if any(r)] == H_lat
