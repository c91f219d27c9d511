"""Exact integer linear algebra on plain Python ints.

Matrices are lists of rows (``list[list[int]]``). A matrix with zero columns
is represented as a list of empty rows so that its row count survives.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple, Sequence

from .errors import ShapeError

Matrix = list[list[int]]


class BezoutResult(NamedTuple):
    g: int
    coeffs: tuple[int, ...]


def shape(A: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(r) != cols for r in A):
        raise ShapeError("ragged matrix")
    return rows, cols


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    rows, cols = shape(A)
    return [[A[i][j] for i in range(rows)] for j in range(cols)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise ShapeError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    Bt = transpose(B) if rb else [[] for _ in range(cb)]
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def columns(A: Sequence[Sequence[int]]) -> list[list[int]]:
    return transpose(A)


def from_columns(cols: Sequence[Sequence[int]]) -> Matrix:
    if not cols:
        raise ShapeError("need at least one column")
    return transpose(cols)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) >= 0``.

    Iterative Euclid with remainders taken in ``[0, |divisor|)``; the
    output is fully determined by the inputs.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        rem = old_r % abs(r)
        q = (old_r - rem) // r
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def multi_gcd_bezout(v: Sequence[int]) -> BezoutResult:
    """Left fold of :func:`ext_gcd`: ``sum(c*x for c, x in zip(coeffs, v)) == g``."""
    g = 0
    coeffs: list[int] = []
    for x in v:
        g, u, w = ext_gcd(g, x)
        coeffs = [c * u for c in coeffs]
        coeffs.append(w)
    return BezoutResult(g, tuple(coeffs))


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def det(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n, m = shape(A)
    if n != m:
        raise ShapeError(f"determinant of non-square {n}x{m} matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
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
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def _col_combine(M: Matrix, j: int, k: int, a: int, b: int, c: int, d: int) -> None:
    # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
    for row in M:
        x, y = row[j], row[k]
        row[j] = a * x + b * y
        row[k] = c * x + d * y


def hnf(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Column Hermite normal form: returns ``(H, U)`` with ``A @ U == H``.

    ``U`` is unimodular. ``H`` has its zero columns first; each pivot column
    has a positive pivot and, in the pivot's row, the entries of the later
    pivot columns lie in ``[0, pivot)``. Rows are processed bottom-up, so
    the layout matches the usual upper-triangular convention.
    """
    m, n = shape(A)
    H = [list(r) for r in A]
    U = identity(n)
    k = n - 1
    for i in range(m - 1, -1, -1):
        if k < 0:
            break
        for j in range(k - 1, -1, -1):
            a = H[i][j]
            if a == 0:
                continue
            b = H[i][k]
            g, u, v = ext_gcd(b, a)
            # new col_k = u*col_k + v*col_j, new col_j = (b/g)*col_j - (a/g)*col_k
            bg, ag = b // g, a // g
            _col_combine(H, j, k, bg, -ag, v, u)
            _col_combine(U, j, k, bg, -ag, v, u)
        p = H[i][k]
        if p == 0:
            continue
        if p < 0:
            for M in (H, U):
                for row in M:
                    row[k] = -row[k]
            p = -p
        for j in range(k + 1, n):
            q = H[i][j] // p
            if q:
                for M in (H, U):
                    for row in M:
                        row[j] -= q * row[k]
        k -= 1
    return H, U


def is_hnf(H: Sequence[Sequence[int]]) -> bool:
    """Shape predicate for the output of :func:`hnf`."""
    m, n = shape(H)
    nonzero = [j for j in range(n) if any(H[i][j] for i in range(m))]
    r = len(nonzero)
    if nonzero != list(range(n - r, n)):
        return False
    # pivot row of column j is its lowest nonzero entry; must strictly rise
    last_row = m
    for j in range(n - 1, n - r - 1, -1):
        i = max(i for i in range(m) if H[i][j])
        if i >= last_row:
            return False
        p = H[i][j]
        if p <= 0:
            return False
        if any(not 0 <= H[i][jj] < p for jj in range(j + 1, n)):
            return False
        last_row = i
    return True


def rank(A: Sequence[Sequence[int]]) -> int:
    H, _ = hnf(A)
    m, n = shape(H)
    return sum(1 for j in range(n) if any(H[i][j] for i in range(m)))


def kernel_basis(A: Sequence[Sequence[int]]) -> Matrix:
    """Saturated basis of ``{x in Z^n : A x = 0}`` as the columns of an n x (n-r) matrix."""
    H, U = hnf(A)
    m, n = shape(H)
    zero = 0
    while zero < n and not any(H[i][zero] for i in range(m)):
        zero += 1
    return [row[:zero] for row in U]
