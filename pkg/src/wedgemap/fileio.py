"""Text serialization of matrices and Plücker vectors.

Matrix file: ``rows cols`` on the first line, then ``rows*cols`` decimal
integers in row-major order. Plücker file: ``n k`` on the first line, then
``C(n, k)`` decimal integers in lexicographic subset order. Any whitespace
separates tokens.
"""
from __future__ import annotations

from math import comb

from .errors import ShapeError
from .exterior import PluckerVector
from .intlin import Matrix


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split()]
    except ValueError as e:
        raise ShapeError(f"non-integer token: {e}") from None


def parse_matrix(text: str) -> Matrix:
    tok = _ints(text)
    if len(tok) < 2:
        raise ShapeError("matrix file needs a 'rows cols' header")
    rows, cols = tok[0], tok[1]
    body = tok[2:]
    if rows < 1 or cols < 0:
        raise ShapeError(f"bad matrix header {rows} {cols}")
    if len(body) != rows * cols:
        raise ShapeError(f"expected {rows * cols} entries, got {len(body)}")
    return [body[i * cols:(i + 1) * cols] for i in range(rows)]


def format_matrix(M: Matrix) -> str:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    lines = [f"{rows} {cols}"]
    lines += [" ".join(map(str, r)) for r in M if r]
    return "\n".join(lines) + "\n"


def parse_plucker(text: str) -> PluckerVector:
    tok = _ints(text)
    if len(tok) < 2:
        raise ShapeError("Plücker file needs an 'n k' header")
    n, k = tok[0], tok[1]
    if n < 1 or not 0 <= k <= n:
        raise ShapeError(f"bad Plücker header {n} {k}")
    if len(tok) - 2 != comb(n, k):
        raise ShapeError(f"expected {comb(n, k)} coordinates, got {len(tok) - 2}")
    return PluckerVector(n, k, tuple(tok[2:]))


def format_plucker(Y: PluckerVector) -> str:
    return f"{Y.n} {Y.k}\n" + " ".join(map(str, Y.coords)) + "\n"
