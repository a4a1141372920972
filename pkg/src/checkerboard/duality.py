"""Opposite lattices and dual lattices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import LatticeParams, LatticeVector, det_lattice, latitude


class OppositeUndefined(ValueError):
    """The opposite map degenerates when ``m == n``."""


class DegenerateForm(ValueError):
    """The form has determinant zero, so there is no dual basis."""


def theta(p: LatticeParams, v: Sequence) -> tuple[Fraction, ...]:
    """``x - lat(x)/m (e_1 + ... + e_n)``.

    Defined on all rational vectors. On L(k, m, n) it is an isometry onto
    L(k, n - m, n) whenever ``m != n``.
    """
    if len(v) != p.n:
        raise ValueError(f"expected length {p.n}, got {len(v)}")
    shift = Fraction(latitude(v), p.m)
    return tuple(Fraction(x) - shift for x in v)


def opposite_params(p: LatticeParams) -> LatticeParams:
    if p.m == p.n:
        raise OppositeUndefined(f"{p} has m == n")
    return LatticeParams(p.k, p.n - p.m, p.n)


def dual_gram(p: LatticeParams) -> list[list[Fraction]]:
    """Inverse of the form matrix: ``delta_ij - (k - m)/det``."""
    d = det_lattice(p)
    if d == 0:
        raise DegenerateForm(f"{p} is degenerate")
    c = Fraction(p.k - p.m, d)
    return [[(1 if i == j else 0) - c for j in range(p.n)] for i in range(p.n)]


def dual_generators(p: LatticeParams) -> list[tuple[Fraction, ...]]:
    """``[e^0, e^1, ..., e^n]`` in standard coordinates.

    ``e^i`` is the dual basis vector to ``e_i`` and ``e^0`` is
    ``(e^1 + ... + e^n)/m``; together they generate the dual lattice.
    """
    C = dual_gram(p)
    rows = [tuple(row) for row in C]
    e0 = tuple(sum(col) / p.m for col in zip(*rows))
    return [e0] + rows


def z_vector(p: LatticeParams, j: int) -> LatticeVector:
    """``(m - k)(e_1 + ... + e_n) + det(L) e_j``; pairs with ``e_i`` to
    ``det(L) delta_ij``."""
    if not 1 <= j <= p.n:
        raise IndexError(f"j={j} out of range 1..{p.n}")
    d = det_lattice(p)
    base = p.m - p.k
    return LatticeVector(base + (d if i == j - 1 else 0) for i in range(p.n))


def fundamental_weight(p: LatticeParams, j: int) -> tuple[Fraction, ...]:
    """``z_j / det(L)``."""
    d = det_lattice(p)
    if d == 0:
        raise DegenerateForm(f"{p} is degenerate")
    return tuple(Fraction(x, d) for x in z_vector(p, j))
