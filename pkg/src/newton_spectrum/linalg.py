"""Small exact linear algebra over the rationals and the integers.

Everything here works on plain sequences of Fractions or ints; sizes are
tiny (ambient dimension at most 6), so simple Gaussian elimination and
Bareiss determinants are the right tools.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[Fraction | int]


def rational_rank(rows: Sequence[Row]) -> int:
    """Rank of a list of row vectors over the rationals."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    cols = len(work[0])
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                factor = work[i][col] / inv
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def solve_square(matrix: Sequence[Row], rhs: Row) -> list[Fraction] | None:
    """Solve a square rational system exactly; None when singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [a / inv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def solve_rectangular(matrix: Sequence[Row], rhs: Row) -> list[Fraction] | None:
    """Solve an (m x k) rational system exactly, m >= k allowed.

    Returns the unique solution when the system is consistent and the
    coefficient matrix has full column rank; None otherwise.
    """
    m = len(matrix)
    if m == 0:
        return [] if all(Fraction(x) == 0 for x in rhs) else None
    k = len(matrix[0])
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    row = 0
    pivots = []
    for col in range(k):
        pivot = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col]
        aug[row] = [a / inv for a in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    if len(pivots) < k:
        return None
    for i in range(row, m):
        if aug[i][k] != 0:
            return None
    solution = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        solution[col] = aug[r][k]
    return solution


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(matrix)
    if n == 0:
        return 1
    work = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((i for i in range(col, n) if work[i][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                work[i][j] = (work[i][j] * work[col][col] - work[i][col] * work[col][j]) // prev
            work[i][col] = 0
        prev = work[col][col]
    return sign * work[n - 1][n - 1]


def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if aik == 0:
                continue
            row_b = b[k]
            row_o = out[i]
            for j in range(cols):
                row_o[j] += aik * row_b[j]
    return out
