"""Classification of parameters: determinant equation, root lattices,
positive-definite unimodular lattices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import LatticeParams, det_lattice, normalize_params


@dataclass(frozen=True)
class DetWitness:
    """Integers with ``k**2 - d == p*q``, ``m == k + p``, ``n == 2k + p + q``."""

    p: int
    q: int


def _divisors(N: int) -> list[int]:
    N = abs(N)
    small, large = [], []
    i = 1
    while i * i <= N:
        if N % i == 0:
            small.append(i)
            if i * i != N:
                large.append(N // i)
        i += 1
    return small + large[::-1]


def solve_det_equation(d: int, k: int, n_max: int
                       ) -> list[tuple[int, int, DetWitness]]:
    """All ``(m, n, witness)`` with ``m != 0``, ``1 <= n <= n_max`` and
    ``m**2 - m n + k n == d``, sorted by ``(m, n)``.

    Solutions come from factorisations ``k**2 - d = p q`` (either sign).
    When ``k**2 == d`` one factor vanishes and the two resulting families
    are listed directly up to ``n_max``.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    N = k * k - d
    found: dict[tuple[int, int], DetWitness] = {}

    def add(p: int, q: int) -> None:
        m, n = k + p, 2 * k + p + q
        if m != 0 and 1 <= n <= n_max:
            found[(m, n)] = DetWitness(p, q)

    if N != 0:
        for p in _divisors(N):
            add(p, N // p)
            add(-p, -(N // p))
    else:
        for n in range(1, n_max + 1):
            add(0, n - 2 * k)        # m == k
            add(n - 2 * k, 0)        # m == n - k
    return [(m, n, w) for (m, n), w in sorted(found.items())]


def k_upper_bound(n: int, d: int) -> Fraction:
    """``n/4 + d/n``: no lattice of rank ``n`` and determinant ``d`` has larger k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(n, 4) + Fraction(d, n)


@dataclass(frozen=True)
class RootLatticeLabel:
    """Root lattice type of L(k, m, n), if any.

    ``family`` is one of ``"A"``, ``"D"``, ``"E"``, ``"A+A1"`` or ``None``.
    """

    family: Optional[str]
    rank: int
    params: LatticeParams
    note: str = ""

    @property
    def name(self) -> str:
        if self.family is None:
            return "none"
        if self.family == "A+A1":
            return f"A{self.rank - 1}+A1"
        return f"{self.family}{self.rank}"

    def __bool__(self) -> bool:
        return self.family is not None


_ALIASES = {
    ("D", 2): "D2 = A1+A1",
    ("D", 3): "D3 = A3",
    ("E", 3): "E3 = A2+A1",
    ("E", 4): "E4 = A4",
    ("E", 5): "E5 = D5",
}


def classify_root_lattice(p: LatticeParams) -> RootLatticeLabel:
    """Root lattice label after parameter normalisation."""
    q = normalize_params(p)
    k, m, n = q
    series = {2: "D", 3: "E"}.get(p.m) if p.k == 2 else None
    note = _ALIASES.get((series, n), "")
    if k != 2:
        return RootLatticeLabel(None, n, q, note)
    if m == 1:
        return RootLatticeLabel("A", n, q, note)
    if m == n:
        return RootLatticeLabel("A+A1", n, q, note)
    if m == 2 and n >= 4:
        return RootLatticeLabel("D", n, q, note)
    if m == 3 and 6 <= n <= 8:
        return RootLatticeLabel("E", n, q, note)
    return RootLatticeLabel(None, n, q, note)


def unimodular_witness(p: LatticeParams) -> Optional[DetWitness]:
    """Nonnegative ``(p, q)`` certifying that L(k, m, n) is positive-definite
    unimodular, or ``None``. Requires ``1 <= m <= n - 1``."""
    k, m, n = p
    if not 1 <= m <= n - 1:
        raise ValueError(f"{p}: need 1 <= m <= n - 1")
    a, b = m - k, n - k - m
    if a >= 0 and b >= 0 and a * b == k * k - 1:
        return DetWitness(a, b)
    return None


def enumerate_unimodular(n: int, even_only: bool = False) -> list[LatticeParams]:
    """All L(k, m, n) with ``1 <= m <= n - 1`` that are positive-definite and
    unimodular, sorted by ``(k, m)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = []
    for m in range(1, n):
        # det == 1 pins k down
        num = 1 - m * m + m * n
        if num % n:
            continue
        p = LatticeParams(num // n, m, n)
        if unimodular_witness(p) is None:
            raise ArithmeticError(f"{p} has det 1 but no nonnegative witness")
        if even_only and p.k % 2:
            continue
        out.append(p)
    return sorted(out, key=lambda q: (q.k, q.m))


def known_names(p: LatticeParams) -> list[str]:
    """Human readable identifications of L(k, m, n) (informational only)."""
    q = normalize_params(p)
    k, m, n = q
    names = []
    label = classify_root_lattice(q)
    if label:
        names.append(label.name)
    if (k, m) == (1, 1):
        names.append(f"Z^{n}")
    candidates = {(k, m)}
    if m < n:
        candidates.add((k, n - m))
    for kk, mm in candidates:
        if mm == kk + 1 and n == kk * kk + 2 * kk and kk >= 1:
            names.append(f"unimodular, contains A{n}")
        if mm == 2 * kk - 1 and n == 4 * kk and kk >= 1:
            names.append(f"D+{n}")
    if n == 24 and (k, m) == (4, 5):
        names.append("Niemeier N(A24)")
    if n == 24 and (k, m) == (6, 11):
        names.append("Niemeier N(D24)")
    return sorted(set(names))


def det_sign_name(p: LatticeParams) -> str:
    d = det_lattice(p)
    if d > 0:
        return "positive-definite"
    if d == 0:
        return "degenerate"
    return "hyperbolic"
