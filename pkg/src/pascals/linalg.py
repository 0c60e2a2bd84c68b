"""Exact Gaussian elimination for small Fraction matrices.

Everything the package needs from linear algebra is a handful of tiny
systems (3x3 up to 15x5), so these routines favour clarity over speed and
never leave the rationals.
"""

from fractions import Fraction


def _copy(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def row_echelon(matrix):
    """Return (echelon form, list of pivot column indices)."""
    rows = _copy(matrix)
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix):
    if not matrix:
        return 0
    return len(row_echelon(matrix)[1])


def det(matrix):
    """Determinant of a square matrix, exactly."""
    rows = _copy(matrix)
    n = len(rows)
    total = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            total = -total
        total *= rows[c][c]
        inv = Fraction(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = rows[i][c] * inv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[c])]
    return total


def solve(matrix, rhs):
    """Solve a square system exactly; None when the matrix is singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    echelon, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        return None
    return [echelon[i][n] for i in range(n)]


def in_row_space(matrix, vector):
    """True when ``vector`` is a rational combination of the rows."""
    base = rank(matrix)
    return rank(list(matrix) + [list(vector)]) == base


def nullity(matrix):
    if not matrix:
        return 0
    return len(matrix[0]) - rank(matrix)
