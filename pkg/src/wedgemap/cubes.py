"""2x2x2 integer cubes and their three binary quadratic forms.

A cube is stored as its front face ``x = (x1, x2, x3, x4)`` and back face
``y = (y1, y2, y3, y4)``, each read row by row.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binforms import Form, compose_arndt, disc, is_primitive
from .errors import PreconditionError, ShapeError
from .exterior import PluckerVector, wedge2
from .intlin import content
from .inversion import invert_rank2


@dataclass(frozen=True)
class BhargavaCube:
    x: tuple[int, int, int, int]
    y: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.x) != 4 or len(self.y) != 4:
            raise ShapeError("a cube has two faces of four entries")
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        object.__setattr__(self, "y", tuple(int(v) for v in self.y))

    @classmethod
    def from_entries(cls, entries) -> BhargavaCube:
        entries = list(entries)
        if len(entries) != 8:
            raise ShapeError(f"a cube has 8 entries, got {len(entries)}")
        return cls(tuple(entries[:4]), tuple(entries[4:]))

    def entries(self) -> tuple[int, ...]:
        return self.x + self.y

    def __str__(self) -> str:
        return " ".join(map(str, self.entries()))


def slices(A: BhargavaCube):
    """The three slicings ``[(M1, N1), (M2, N2), (M3, N3)]`` as 2x2 row lists."""
    x1, x2, x3, x4 = A.x
    y1, y2, y3, y4 = A.y
    return [
        ([[x1, x2], [x3, x4]], [[y1, y2], [y3, y4]]),
        ([[x1, x3], [y1, y3]], [[x2, x4], [y2, y4]]),
        ([[x1, y1], [x2, y2]], [[x3, y3], [x4, y4]]),
    ]


def plucker_of_cube(A: BhargavaCube) -> PluckerVector:
    return wedge2(A.x, A.y)


def _det2(a, b, c, d) -> int:
    return a * d - b * c


def cube_form(A: BhargavaCube, i: int) -> Form:
    x1, x2, x3, x4 = A.x
    y1, y2, y3, y4 = A.y
    if i == 1:
        return Form(
            -_det2(x1, x2, x3, x4),
            _det2(x1, x2, y3, y4) - _det2(x3, x4, y1, y2),
            -_det2(y1, y2, y3, y4),
        )
    X12, X13, X14, X23, X24, X34 = plucker_of_cube(A).coords
    if i == 2:
        return Form(-X13, X14 + X23, -X24)
    if i == 3:
        return Form(-X12, X14 - X23, -X34)
    raise ValueError(f"cube form index must be 1, 2 or 3, got {i}")


def cube_forms(A: BhargavaCube) -> tuple[Form, Form, Form]:
    return cube_form(A, 1), cube_form(A, 2), cube_form(A, 3)


def is_projective(A: BhargavaCube) -> bool:
    return all(is_primitive(q) for q in cube_forms(A))


def build_cube(q2, q3) -> BhargavaCube:
    """A cube whose second and third forms are exactly ``q2`` and ``q3``."""
    a2, b2, c2 = q2
    a3, b3, c3 = q3
    D = disc(q2)
    if disc(q3) != D:
        raise PreconditionError(f"discriminant mismatch: {D} vs {disc(q3)}")
    for q in (q2, q3):
        if not is_primitive(q):
            raise PreconditionError(f"form {tuple(q)} is not primitive")
    X = PluckerVector(4, 2, (-a3, -a2, (b2 + b3) // 2, (b2 - b3) // 2, -c2, -c3))
    assert content(X.coords) == 1
    res = invert_rank2(X, reduce_x2=False)
    A = BhargavaCube(tuple(res.x), tuple(res.y))
    if cube_form(A, 2) != tuple(q2) or cube_form(A, 3) != tuple(q3):
        raise PreconditionError("constructed cube does not reproduce the input forms")
    return A


def compose_cubes(A: BhargavaCube, B: BhargavaCube) -> BhargavaCube:
    """A cube whose i-th form lies in the class ``[Q_i(A)] + [Q_i(B)]`` for i = 1, 2, 3."""
    fa, fb = cube_forms(A), cube_forms(B)
    for f in fa + fb:
        if not is_primitive(f):
            raise PreconditionError(f"cube is not projective: form {tuple(f)} is not primitive")
    if disc(fa[0]) != disc(fb[0]):
        raise PreconditionError(f"discriminant mismatch: {disc(fa[0])} vs {disc(fb[0])}")
    q2 = compose_arndt(fa[1], fb[1])[0]
    q3 = compose_arndt(fa[2], fb[2])[0]
    return build_cube(q2, q3)
