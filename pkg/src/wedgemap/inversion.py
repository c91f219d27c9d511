"""Finding preimages of the wedge map.

Grade 2 is handled by a single-gcd construction; grades n-1 and n-2 go
through integer kernels and the duality map; grades 1 and n are trivial.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotDecomposableError, PreconditionError, ShapeError, UnsupportedGradeError
from .exterior import (
    PluckerVector,
    dot,
    hat,
    hat_hat_sign,
    plucker_check,
    subset_index,
    wedge,
    wedge2,
)
from .intlin import BezoutResult, Matrix, content, det, from_columns, kernel_basis, multi_gcd_bezout, shape, transpose


@dataclass(frozen=True)
class InversionResult:
    system: Matrix  # n x 2, columns x and y
    pivot: tuple[int, int]
    bezout: BezoutResult

    @property
    def x(self) -> list[int]:
        return [r[0] for r in self.system]

    @property
    def y(self) -> list[int]:
        return [r[1] for r in self.system]


def cox_solve(p: Sequence[int], q: Sequence[int], y: int) -> int:
    """Unique ``x`` in ``[0, |y|)`` with ``p_i * x == q_i (mod y)`` for all i.

    Requires ``gcd(y, p) == 1`` and every minor ``p_i q_j - p_j q_i`` divisible by y.
    """
    if len(p) != len(q) or not p:
        raise ShapeError("p and q must be nonempty and of equal length")
    if y == 0:
        raise PreconditionError("modulus y must be nonzero")
    r = len(p)
    bez = multi_gcd_bezout(list(p) + [y])
    if bez.g != 1:
        raise PreconditionError(f"gcd(y, p) = {bez.g} != 1")
    for i in range(r):
        for j in range(i + 1, r):
            m = p[i] * q[j] - p[j] * q[i]
            if m % y:
                raise PreconditionError(f"minor ({i + 1},{j + 1}) = {m} not divisible by {y}")
    L = bez.coeffs[:r]
    return sum(a * b for a, b in zip(L, q)) % abs(y)


def _pivot(Y: PluckerVector) -> tuple[int, int]:
    for (i, j), v in Y.items():
        if v:
            return i, j
    raise PreconditionError("cannot invert the zero vector")


def _not_decomposable(Y: PluckerVector, detail: str) -> NotDecomposableError:
    bad = plucker_check(Y)
    if bad:
        q = bad[0]
        return NotDecomposableError(
            f"Plücker relation violated at quadruple {q}", quadruple=q
        )
    # unreachable when the construction is correct; keep the evidence
    return NotDecomposableError(f"inversion failed although all relations hold: {detail}")


def invert_rank2(Y: PluckerVector, reduce_x2: bool = True) -> InversionResult:
    """Find x, y with ``x ^ y == Y`` for a nonzero grade-2 vector Y.

    The coordinates are permuted so that the first nonzero coordinate sits at
    position (1, 2). Then ``x_1`` is the gcd of the first row of Y, ``y`` is that
    row divided by ``x_1`` (with ``y_1 = 0``), and ``x_2`` solves a linear
    congruence modulo ``y_2`` using the same Bezout coefficients. With
    ``reduce_x2`` the residue is taken in ``[0, |y_2|)``; otherwise the raw sum
    of Bezout terms is kept.
    """
    if Y.k != 2:
        raise ShapeError(f"expected grade 2, got {Y.k}")
    n = Y.n
    pi, pj = _pivot(Y)
    # perm[m] = original index sitting at new position m+1
    perm = [pi, pj] + [t for t in range(1, n + 1) if t not in (pi, pj)]
    idx = subset_index(n, 2)
    c = Y.coords

    def X(a: int, b: int) -> int:
        oa, ob = perm[a - 1], perm[b - 1]
        return c[idx[oa, ob]] if oa < ob else -c[idx[ob, oa]]

    row1 = [X(1, j) for j in range(2, n + 1)]
    bez = multi_gcd_bezout(row1)
    x1 = bez.g
    lam = bez.coeffs  # lam[j-2] pairs with X(1, j)
    xs = [0] * n
    ys = [0] * n
    xs[0] = x1
    for j in range(2, n + 1):
        ys[j - 1] = row1[j - 2] // x1
    y2 = ys[1]
    x2 = sum(lam[j - 2] * X(2, j) for j in range(3, n + 1))
    if reduce_x2:
        x2 %= abs(y2)
    xs[1] = x2
    for j in range(3, n + 1):
        num = x2 * ys[j - 1] - X(2, j)
        if num % y2:
            raise _not_decomposable(Y, f"x_{j} not integral")
        xs[j - 1] = num // y2

    x = [0] * n
    y = [0] * n
    for m, orig in enumerate(perm):
        x[orig - 1] = xs[m]
        y[orig - 1] = ys[m]
    if wedge2(x, y) != Y:
        raise _not_decomposable(Y, "wedge of the candidate differs from the target")
    return InversionResult(from_columns([x, y]), (pi, pj), bez)


def _fix_orientation(V: Matrix, target: PluckerVector, scale: int) -> Matrix:
    V = [list(r) for r in V]
    for r in V:
        r[0] *= scale
    W = wedge(V)
    if W == target:
        return V
    if W == -target:
        for r in V:
            r[0] = -r[0]
        return V
    raise PreconditionError("kernel wedge is not proportional to the target")


def invert_codim1(Y: PluckerVector) -> Matrix:
    """n-1 vectors whose wedge is exactly Y (grade n-1)."""
    n = Y.n
    if Y.k != n - 1 or n < 2:
        raise ShapeError(f"expected grade {n - 1}, got {Y.k}")
    if Y.is_zero():
        raise PreconditionError("cannot invert the zero vector")
    v = list(hat(Y).coords)
    g = content(v)
    K = kernel_basis([[a // g for a in v]])
    return _fix_orientation(K, Y, g)


def invert_complement(W: Sequence[Sequence[int]]) -> Matrix:
    """n-k vectors whose wedge is exactly ``hat(wedge(W))`` for an n x k system W, k < n-k."""
    n, k = shape(W)
    if not 0 < k < n - k:
        raise ShapeError(f"need 0 < k < n - k, got n={n}, k={k}")
    w = wedge(W)
    if w.is_zero():
        raise PreconditionError("degenerate system: wedge is zero")
    target = hat(w)
    K = kernel_basis(transpose(W))
    return _fix_orientation(K, target, w.content())


def invert(Y: PluckerVector) -> Matrix:
    """Any integer n x k system whose wedge is exactly Y."""
    n, k = Y.n, Y.k
    if k < 1:
        raise UnsupportedGradeError("grade 0 has no vector system")
    if Y.is_zero():
        raise PreconditionError("cannot invert the zero vector")
    if k == 1:
        return [[c] for c in Y.coords]
    if k == n:
        M = [[int(i == j) for j in range(n)] for i in range(n)]
        M[0][0] = Y.coords[0]
        return M
    if k == 2:
        return invert_rank2(Y).system
    if k == n - 1:
        return invert_codim1(Y)
    if k == n - 2:
        Z = hat(Y).scale(hat_hat_sign(n))
        W = invert_rank2(Z).system
        return invert_complement(W)
    raise UnsupportedGradeError(
        f"no inversion algorithm for grade {k} in dimension {n} (needs k in 1, 2, n-2, n-1, n)"
    )


def transition_matrix(A: Sequence[Sequence[int]], E: Sequence[Sequence[int]]) -> Matrix:
    """Integer k x k matrix H with ``A @ H == E`` and ``det H == t`` where ``wedge(E) == t * wedge(A)``.

    ``wedge(A)`` must be primitive. Entry (s, t) is ``L . wedge(A with column s
    replaced by column t of E)`` for any integer L with ``L . wedge(A) == 1``.
    """
    n, k = shape(A)
    if shape(E) != (n, k):
        raise ShapeError(f"systems of shapes {shape(A)} and {shape(E)}")
    wa = wedge(A)
    bez = multi_gcd_bezout(wa.coords)
    if bez.g != 1:
        raise PreconditionError(f"system A is not primitive (content {bez.g})")
    L = PluckerVector(n, k, bez.coeffs)
    we = wedge(E)
    t = dot(L, we)
    if t == 0 or we != wa.scale(t):
        raise PreconditionError("wedge(E) is not a nonzero multiple of wedge(A)")
    H = [[0] * k for _ in range(k)]
    for s in range(k):
        for u in range(k):
            M = [list(r) for r in A]
            for i in range(n):
                M[i][s] = E[i][u]
            H[s][u] = dot(L, wedge(M))
    assert det(H) == t
    return H
