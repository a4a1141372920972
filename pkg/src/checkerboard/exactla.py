"""Exact integer and rational linear algebra.

Matrices are plain lists of row lists holding Python ``int`` or
``fractions.Fraction`` entries. Nothing here touches floating point.

The routines are deliberately simple (dense, elimination based); the
lattices handled by this package have rank at most a few dozen.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import List, Sequence

Matrix = List[list]


class NoSolution(ValueError):
    """Raised by :func:`solve_rational` when ``A x = b`` is inconsistent."""


class ShapeError(ValueError):
    """Raised when matrix or vector dimensions do not fit together."""


# --------------------------------------------------------------------------
# basic helpers

def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def copy(A: Sequence[Sequence]) -> Matrix:
    return [list(row) for row in A]


def shape(A: Sequence[Sequence], cols: int | None = None) -> tuple[int, int]:
    """Return ``(rows, cols)``; ``cols`` must be given for empty matrices."""
    rows = len(A)
    if rows:
        width = len(A[0])
        if any(len(r) != width for r in A):
            raise ShapeError("ragged matrix")
        if cols is not None and cols != width:
            raise ShapeError(f"expected {cols} columns, got {width}")
        return rows, width
    if cols is None:
        return 0, 0
    return 0, cols


def transpose(A: Sequence[Sequence], cols: int | None = None) -> Matrix:
    rows, width = shape(A, cols)
    return [[A[i][j] for i in range(rows)] for j in range(width)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise ShapeError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x?")
    Bt = list(zip(*B)) if B else []
    return [[sum(map(mul, row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> list:
    return [sum(map(mul, row, x)) for row in A]


def vecmat(x: Sequence, A: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    if not A:
        return []
    width = len(A[0])
    out = [0] * width
    for xi, row in zip(x, A):
        if xi:
            for j in range(width):
                out[j] += xi * row[j]
    return out


def dot(x: Sequence, y: Sequence) -> int | Fraction:
    return sum(map(mul, x, y))


def is_integral(A: Sequence[Sequence]) -> bool:
    return all(_is_int(a) for row in A for a in row)


def _is_int(a) -> bool:
    return isinstance(a, int) or (isinstance(a, Fraction) and a.denominator == 1)


def to_int(A: Sequence[Sequence]) -> Matrix:
    """Convert an integer-valued rational matrix to ``int`` entries."""
    out = []
    for row in A:
        new = []
        for a in row:
            if not _is_int(a):
                raise ValueError(f"entry {a} is not an integer")
            new.append(int(a))
        out.append(new)
    return out


# --------------------------------------------------------------------------
# determinants and inverses

def det_bareiss(A: Sequence[Sequence]) -> int | Fraction:
    """Determinant by Bareiss fraction-free elimination.

    For integer input every intermediate quotient is exact, so the result is
    an ``int``. Rational input is accepted and handled the same way.
    """
    n = len(A)
    if n == 0:
        return 1
    M = copy(A)
    if any(len(r) != n for r in M):
        raise ShapeError("determinant of a non-square matrix")
    integral = is_integral(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * pivot - M[i][k] * M[k][j]
                M[i][j] = num // prev if integral else num / prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def inverse(A: Sequence[Sequence]) -> Matrix:
    """Exact inverse over the rationals (Gauss-Jordan)."""
    n = len(A)
    aug = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [a * inv for a in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def unimodular_inverse(U: Sequence[Sequence]) -> Matrix:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    # the Hermite form of a unimodular matrix is the identity
    H, W = hermite_normal_form(U)
    if H != identity(len(U)):
        raise ValueError("matrix is not unimodular")
    return W


# --------------------------------------------------------------------------
# linear solving

def solve_rational(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve ``A x = b`` exactly over the rationals.

    Returns one solution (free variables set to zero) when the system is
    consistent and raises :class:`NoSolution` otherwise.
    """
    rows = len(A)
    if len(b) != rows:
        raise ShapeError(f"right-hand side has length {len(b)}, expected {rows}")
    cols = len(A[0]) if rows else 0
    aug = [[Fraction(a) for a in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * v for a, v in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            raise NoSolution("inconsistent linear system")
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


# --------------------------------------------------------------------------
# inertia

def inertia(A: Sequence[Sequence]) -> tuple[int, int, int]:
    """Return ``(positive, negative, zero)`` counts of a symmetric matrix.

    Congruence diagonalisation over the rationals. When every remaining
    diagonal entry is zero but an off-diagonal one is not, the pair spans a
    hyperbolic plane; a shear ``x_i += x_j`` turns it into a usable pivot.
    """
    M = [[Fraction(a) for a in row] for row in A]
    n = len(M)
    if any(M[i][j] != M[j][i] for i in range(n) for j in range(i)):
        raise ValueError("inertia requires a symmetric matrix")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active
                         if i < j and M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for t in range(n):
                M[i][t] += M[j][t]
            for t in range(n):
                M[t][i] += M[t][j]
            piv = i
        d = M[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        prow = M[piv][:]
        for i in active:
            f = M[i][piv] / d
            if f:
                for j in active:
                    M[i][j] -= f * prow[j]
        for i in active:
            M[i][piv] = M[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg


# --------------------------------------------------------------------------
# Hermite normal form

def hermite_normal_form(A: Sequence[Sequence], cols: int | None = None
                        ) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ A == H``, ``U`` unimodular, pivots of ``H``
    positive, entries above each pivot reduced into ``[0, pivot)`` and zero
    rows collected at the bottom.
    """
    rows, width = shape(A, cols)
    H = [list(map(int, row)) for row in A]
    U = identity(rows)
    r = 0
    for c in range(width):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            if p != r:
                H[r], H[p] = H[p], H[r]
                U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, rows):
                q = H[i][c] // H[r][c]
                if q:
                    _row_axpy(H, i, r, -q)
                    _row_axpy(U, i, r, -q)
                if H[i][c]:
                    done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                _row_axpy(H, i, r, -q)
                _row_axpy(U, i, r, -q)
        r += 1
    return H, U


def _row_axpy(M: Matrix, dst: int, src: int, f: int) -> None:
    M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]


def _col_axpy(M: Matrix, dst: int, src: int, f: int) -> None:
    for row in M:
        row[dst] += f * row[src]


def _col_swap(M: Matrix, a: int, b: int) -> None:
    for row in M:
        row[a], row[b] = row[b], row[a]


# --------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    The diagonal of ``D`` is nonnegative and each entry divides the next.
    """

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def invariant_factors(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]


def smith_normal_form(A: Sequence[Sequence], cols: int | None = None
                      ) -> SmithDecomposition:
    """Smith normal form by elementary row and column operations.

    The pivot at each stage is the smallest nonzero ``|entry|`` of the
    remaining block.
    """
    rows, width = shape(A, cols)
    D = [list(map(int, row)) for row in A]
    U = identity(rows)
    V = identity(width)
    for t in range(min(rows, width)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, width):
                    a = D[i][j]
                    if a and (best is None or abs(a) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return SmithDecomposition(U, D, V)
            i, j = best
            if i != t:
                D[t], D[i] = D[i], D[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                _col_swap(D, t, j)
                _col_swap(V, t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = D[i][t] // p
                if q:
                    _row_axpy(D, i, t, -q)
                    _row_axpy(U, i, t, -q)
                if D[i][t]:
                    clean = False
            for j in range(t + 1, width):
                q = D[t][j] // p
                if q:
                    _col_axpy(D, j, t, -q)
                    _col_axpy(V, j, t, -q)
                if D[t][j]:
                    clean = False
            if not clean:
                continue
            # pivot must divide the whole remaining block
            bad = next((i for i in range(t + 1, rows)
                        if any(D[i][j] % p for j in range(t + 1, width))), None)
            if bad is None:
                break
            _row_axpy(D, t, bad, 1)
            _row_axpy(U, t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return SmithDecomposition(U, D, V)


# --------------------------------------------------------------------------
# kernels

def integer_kernel(A: Sequence[Sequence], cols: int | None = None) -> list[list[int]]:
    """Primitive basis of ``{x in Z^cols : A x = 0}``.

    The basis rows are taken from the transform of a Hermite reduction of
    ``A^T``, so they extend to a unimodular basis of ``Z^cols``; they are
    then put in Hermite form themselves for a canonical answer.
    """
    rows, width = shape(A, cols)
    H, U = hermite_normal_form(transpose(A, width), cols=rows)
    kernel = [U[i] for i in range(width) if not any(H[i])]
    if not kernel:
        return []
    Hk, _ = hermite_normal_form(kernel)
    return [row for row in Hk if any(row)]
