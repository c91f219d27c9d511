"""k-adjoints of square matrices and the Gram map on decomposable vectors."""
from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError, ShapeError
from .exterior import PluckerVector, subsets
from .intlin import Matrix, det, matmul, shape, transpose
from .inversion import invert


def _square(A) -> int:
    n, m = shape(A)
    if n != m:
        raise ShapeError(f"expected a square matrix, got {n}x{m}")
    return n


def k_adjoint(A: Sequence[Sequence[int]], k: int) -> Matrix:
    """Matrix of k x k minors ``det A[I, J]``, rows and columns in lex subset order."""
    n = _square(A)
    if not 1 <= k <= n:
        raise ShapeError(f"grade {k} out of range for {n}x{n} matrix")
    S = subsets(n, k)
    return [[det([[A[i - 1][j - 1] for j in J] for i in I]) for J in S] for I in S]


def pairing_A(X, Y, A) -> int:
    """``det(X^T A Y)`` for n x k systems X, Y."""
    n = _square(A)
    if shape(X) != shape(Y) or shape(X)[0] != n:
        raise ShapeError(f"incompatible shapes {shape(X)}, {shape(Y)} for {n}x{n} form")
    return det(matmul(matmul(transpose(X), A), Y))


def gram(X, A) -> Matrix:
    """``X^T A X``."""
    n = _square(A)
    if shape(X)[0] != n:
        raise ShapeError(f"system has {shape(X)[0]} rows, form is {n}x{n}")
    return matmul(matmul(transpose(X), A), X)


def adjoint_norm(x: PluckerVector, A) -> int:
    """``x^T Â x`` with Â the grade-k adjoint of A."""
    Ah = k_adjoint(A, x.k)
    c = x.coords
    return sum(ci * sum(a * cj for a, cj in zip(row, c)) for ci, row in zip(c, Ah))


def is_symmetric(A) -> bool:
    n = _square(A)
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(i))


def is_positive_definite(A) -> bool:
    """Sylvester's criterion on leading principal minors (exact)."""
    n = _square(A)
    if not is_symmetric(A):
        return False
    return all(det([row[:m] for row in A[:m]]) > 0 for m in range(1, n + 1))


def represent_norm(x: PluckerVector, A) -> Matrix:
    """Gram matrix ``X^T A X`` of a preimage X of the decomposable vector x.

    Only determinant and SL_k class are meaningful; ``det`` of the result
    equals :func:`adjoint_norm`.
    """
    n = _square(A)
    if x.n != n:
        raise ShapeError(f"vector lives in Z^{x.n}, form is {n}x{n}")
    if not is_positive_definite(A):
        raise PreconditionError("form matrix is not symmetric positive definite")
    return gram(invert(x), A)
