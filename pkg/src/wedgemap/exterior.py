"""Plücker coordinates: the wedge map, duality, pairings and relations.

Subsets are 1-based increasing tuples; coordinates of a grade-k vector in
``Z^n`` are stored in lexicographic subset order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import ShapeError
from .intlin import Matrix, content, det, matmul, shape, transpose

Subset = tuple[int, ...]


@lru_cache(maxsize=None)
def subsets(n: int, k: int) -> tuple[Subset, ...]:
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def subset_index(n: int, k: int) -> dict[Subset, int]:
    return {I: pos for pos, I in enumerate(subsets(n, k))}


def complement(I: Subset, n: int) -> Subset:
    s = set(I)
    return tuple(i for i in range(1, n + 1) if i not in s)


def weight(I: Subset) -> int:
    return sum(I)


@dataclass(frozen=True)
class PluckerVector:
    n: int
    k: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.k <= self.n or self.n < 1:
            raise ShapeError(f"bad grade {self.k} for ambient dimension {self.n}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != comb(self.n, self.k):
            raise ShapeError(
                f"expected {comb(self.n, self.k)} coordinates for n={self.n}, k={self.k},"
                f" got {len(self.coords)}"
            )

    def __getitem__(self, I: Subset) -> int:
        return self.coords[subset_index(self.n, self.k)[tuple(I)]]

    def __neg__(self) -> PluckerVector:
        return self.scale(-1)

    def scale(self, c: int) -> PluckerVector:
        return PluckerVector(self.n, self.k, tuple(c * x for x in self.coords))

    def content(self) -> int:
        return content(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def items(self):
        return zip(subsets(self.n, self.k), self.coords)


def _rows(X: Sequence[Sequence[int]], I: Subset) -> Matrix:
    return [list(X[i - 1]) for i in I]


def wedge(X: Sequence[Sequence[int]]) -> PluckerVector:
    """Plücker coordinates of the columns of the n x k matrix ``X``."""
    n, k = shape(X)
    if k < 1 or k > n:
        raise ShapeError(f"cannot wedge {k} vectors in Z^{n}")
    return PluckerVector(n, k, tuple(det(_rows(X, I)) for I in subsets(n, k)))


def wedge2(x: Sequence[int], y: Sequence[int]) -> PluckerVector:
    if len(x) != len(y):
        raise ShapeError("vectors of different lengths")
    n = len(x)
    return PluckerVector(
        n, 2, tuple(x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1] for i, j in subsets(n, 2))
    )


def hat(Y: PluckerVector) -> PluckerVector:
    """Duality map to grade ``n - k``: ``hat(Y)_I = (-1)**weight(J) * Y_J`` with J the complement of I."""
    n = Y.n
    out = []
    for I in subsets(n, n - Y.k):
        J = complement(I, n)
        v = Y[J]
        out.append(-v if weight(J) % 2 else v)
    return PluckerVector(n, n - Y.k, tuple(out))


def hat_hat_sign(n: int) -> int:
    return -1 if (n * (n + 1) // 2) % 2 else 1


def dot(Y: PluckerVector, Z: PluckerVector) -> int:
    if (Y.n, Y.k) != (Z.n, Z.k):
        raise ShapeError("Plücker vectors of different shape")
    return sum(a * b for a, b in zip(Y.coords, Z.coords))


def pairing(X: Sequence[Sequence[int]], Y: Sequence[Sequence[int]]) -> int:
    """``det(X^T Y)`` for two n x k systems."""
    if shape(X) != shape(Y):
        raise ShapeError(f"pairing of {shape(X)} with {shape(Y)}")
    return det(matmul(transpose(X), Y))


def complementary_det(X: Sequence[Sequence[int]], Y: Sequence[Sequence[int]]) -> int:
    """Determinant of the square matrix ``[X | Y]``.

    Equals ``complementary_sign(n, k) * dot(wedge(X), hat(wedge(Y)))`` where
    k is the number of columns of X.
    """
    n, k = shape(X)
    m, l = shape(Y)
    if n != m or k + l != n:
        raise ShapeError(f"{n}x{k} and {m}x{l} do not form a square matrix")
    return det([list(X[i]) + list(Y[i]) for i in range(n)])


def complementary_sign(n: int, k: int) -> int:
    return -1 if (n * (n + 1) // 2 + k * (k + 1) // 2) % 2 else 1


def plucker_residue(Y: PluckerVector, i: int, j: int, k: int, l: int) -> int:
    c = Y.coords
    idx = subset_index(Y.n, 2)
    return (
        c[idx[i, j]] * c[idx[k, l]]
        - c[idx[i, k]] * c[idx[j, l]]
        + c[idx[i, l]] * c[idx[j, k]]
    )


def plucker_check(Y: PluckerVector) -> list[tuple[int, int, int, int]]:
    """All quadruples ``i<j<k<l`` whose quadratic Plücker relation fails."""
    if Y.k != 2:
        raise ShapeError(f"Plücker relations implemented for grade 2 only, got {Y.k}")
    return [q for q in subsets(Y.n, 4) if plucker_residue(Y, *q) != 0]


def is_primitive(Y: PluckerVector) -> bool:
    return Y.content() == 1
