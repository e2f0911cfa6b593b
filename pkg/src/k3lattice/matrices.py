"""Exact integer and rational matrix algebra.

Matrices are plain lists of row lists. Everything runs on Python ints or
fractions.Fraction, so no overflow and no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "identity",
    "copy_matrix",
    "transpose",
    "mat_mul",
    "mat_vec",
    "is_symmetric",
    "det",
    "rational_inverse",
    "unimodular_inverse",
    "rational_solve",
    "inertia",
    "SmithDecomposition",
    "smith_normal_form",
]

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(m) -> Matrix:
    return [list(row) for row in m]


def transpose(m) -> Matrix:
    if not m:
        return []
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]


def mat_mul(a, b) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != inner:
        raise ValueError("dimension mismatch in matrix product")
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(m, v) -> list:
    if m and len(m[0]) != len(v):
        raise ValueError("dimension mismatch in matrix-vector product")
    return [sum(row[k] * v[k] for k in range(len(v))) for row in m]


def is_symmetric(m) -> bool:
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def det(m) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Bareiss: prev divides the cross product
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m) -> list[list[Fraction]]:
    """Inverse over Q by Gauss-Jordan; raises ValueError when singular."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse requires a square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def unimodular_inverse(m) -> Matrix:
    """Integer inverse of a matrix with determinant +-1."""
    d = det(m)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    inv = rational_inverse(m)
    return [[int(x) for x in row] for row in inv]


def rational_solve(a, b) -> list[Fraction]:
    """Solve the square system a x = b over Q; raises ValueError when singular."""
    inv = rational_inverse(a)
    return [sum(inv[i][k] * Fraction(b[k]) for k in range(len(b))) for i in range(len(b))]


def inertia(m) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric matrix.

    Exact congruence diagonalization over Q; never touches floats.
    """
    n = len(m)
    if not is_symmetric(m):
        raise ValueError("inertia requires a symmetric matrix")
    a = [[Fraction(x) for x in row] for row in m]
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
                a[k], a[swap] = a[swap], a[k]
            else:
                off = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if off is None:
                    zero += 1
                    continue
                # both diagonals vanish; adding row/col makes the pivot 2*a[k][off]
                for j in range(n):
                    a[k][j] += a[off][j]
                for i in range(n):
                    a[i][k] += a[i][off]
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / piv
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
                for j in range(k, n):
                    a[j][i] = a[i][j]
    return pos, neg, zero


@dataclass
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D = diag(d1, d2, ...).

    The diagonal is nonnegative and each entry divides the next; any sign
    is absorbed into V.
    """

    d: Matrix
    u: Matrix
    v: Matrix

    def diagonal(self) -> list[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))]

    def invariant_factors(self) -> list[int]:
        return [x for x in self.diagonal() if x != 0]


def _pivot_min_abs(a, k, rows, cols):
    best = None
    for i in range(k, rows):
        for j in range(k, cols):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _pivot_first(a, k, rows, cols):
    for i in range(k, rows):
        for j in range(k, cols):
            if a[i][j] != 0:
                return (i, j)
    return None


_PIVOTS = {"min_abs": _pivot_min_abs, "first": _pivot_first}


def smith_normal_form(m, pivot: str = "min_abs") -> SmithDecomposition:
    """Smith normal form with tracked unimodular factors.

    pivot selects the elimination order ("min_abs" or "first"); the resulting
    diagonal is the same either way.
    """
    if pivot not in _PIVOTS:
        raise ValueError(f"unknown pivot strategy {pivot!r}")
    choose = _PIVOTS[pivot]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    a = copy_matrix(m)
    u = identity(rows)
    v = identity(cols)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_add(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def col_add(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for k in range(min(rows, cols)):
        while True:
            pos = choose(a, k, rows, cols)
            if pos is None:
                break
            if pos != (k, k):
                if pos[0] != k:
                    row_swap(k, pos[0])
                if pos[1] != k:
                    col_swap(k, pos[1])
            # Euclidean descent: a remainder that survives reduction is
            # strictly smaller than the pivot, so promoting it guarantees
            # termination for every pivot strategy.
            restart = False
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    row_add(i, k, -q)
                    if a[i][k] != 0:
                        row_swap(k, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    col_add(j, k, -q)
                    if a[k][j] != 0:
                        col_swap(k, j)
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the whole remaining block or the chain breaks
            stray = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % a[k][k] != 0:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            row_add(k, stray, 1)
        if pos is None:
            break
    n = min(rows, cols)
    for i in range(n):
        if a[i][i] < 0:
            col_add(i, i, -2)  # negate column i keeping V unimodular
    return SmithDecomposition(a, u, v)
