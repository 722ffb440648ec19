"""Exact linear algebra over rationals.

Small dense routines backing the hull, triangulation and interpolation code.
Everything works on sequences of ``Fraction`` and never touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = Sequence[Fraction]


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce in place; return the matrix and its pivot columns."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Sequence[Row]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    return len(_echelon(rows)[1])


def nullspace(vectors: Sequence[Row], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace of the matrix with the given rows."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rows, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][f]
        basis.append(tuple(vec))
    return basis


def solve(matrix: Sequence[Row], rhs: Row) -> list[Fraction]:
    """Solve a square nonsingular system exactly.

    Raises ``ValueError`` when the matrix is singular.
    """
    n = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    rows, pivots = _echelon(rows)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [rows[i][n] for i in range(n)]


def det(matrix: Sequence[Row]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination (exact)."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def primitive_integer(vector: Row) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    The result keeps the orientation of the input and has entry gcd 1.
    """
    fracs = [Fraction(x) for x in vector]
    if all(x == 0 for x in fracs):
        raise ValueError("zero vector has no primitive form")
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)
