"""Dense exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction`.  Nothing
here knows about gradings; the graded layer sits on top.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point scalars are not accepted")
    return Fraction(value)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(as_fraction(x) for x in row) for row in rows)


def zeros(nrows: int, ncols: int) -> Matrix:
    return tuple((ZERO,) * ncols for _ in range(nrows))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return ()
    bt = transpose(b, len(b[0]) if b else 0) if b else ()
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append(tuple(
            sum((x * y for x, y in zip(row, bt[j]) if x and y), ZERO)
            for j in range(ncols)
        ))
    return tuple(out)


def matvec(a: Matrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    c = as_fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in m]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : m x = 0}, one vector per free column, in column order."""
    if not m:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    rows, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def is_invertible(m: Matrix) -> bool:
    return len(m) == (len(m[0]) if m else 0) and rank(m) == len(m)


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    if not is_invertible(m):
        raise ValueError("matrix is singular")
    aug = tuple(tuple(row) + identity(n)[i] for i, row in enumerate(m))
    rows, _ = rref(aug)
    return tuple(tuple(row[n:]) for row in rows)
