"""Binary quadratic forms ax^2 + bxy + cy^2: reduction and composition."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

from .errors import PreconditionError
from .intlin import Matrix, multi_gcd_bezout


class BinaryQuadraticForm(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"{self.a} {self.b} {self.c}"

    @property
    def disc(self) -> int:
        return disc(self)

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y


Form = BinaryQuadraticForm


def disc(q) -> int:
    a, b, c = q
    return b * b - 4 * a * c


def is_primitive(q) -> bool:
    a, b, c = q
    return gcd(gcd(a, b), c) == 1


def act(q, T) -> Form:
    """The form ``(x, y) -> q(T @ (x, y))`` for a 2x2 integer matrix T."""
    a, b, c = q
    (al, be), (ga, de) = T
    return Form(
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


def _mul2(S, T) -> Matrix:
    return [
        [S[0][0] * T[0][0] + S[0][1] * T[1][0], S[0][0] * T[0][1] + S[0][1] * T[1][1]],
        [S[1][0] * T[0][0] + S[1][1] * T[1][0], S[1][0] * T[0][1] + S[1][1] * T[1][1]],
    ]


def is_reduced(q) -> bool:
    a, b, c = q
    if not abs(b) <= a <= c:
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def reduce_definite(q) -> tuple[Form, Matrix]:
    """Reduced form and ``T`` in SL2(Z) with ``act(q, T) == reduced``. Positive definite input only."""
    a, b, c = q
    if b * b - 4 * a * c >= 0 or a <= 0:
        raise PreconditionError(f"form {tuple(q)} is not positive definite")
    T = [[1, 0], [0, 1]]
    while True:
        # translate b into (-a, a]
        r = (a - b) // (2 * a)
        if r:
            a, b, c = a, b + 2 * r * a, a * r * r + b * r + c
            T = _mul2(T, [[1, r], [0, 1]])
        if a > c or (a == c and b < 0):
            a, b, c = c, -b, a
            T = _mul2(T, [[0, -1], [1, 0]])
            continue
        break
    return Form(a, b, c), T


def reduce_form(q) -> Form:
    return reduce_definite(q)[0]


def equivalent_definite(q1, q2) -> bool:
    if disc(q1) != disc(q2):
        raise PreconditionError(f"discriminants differ: {disc(q1)} vs {disc(q2)}")
    return reduce_form(q1) == reduce_form(q2)


def class_key(q) -> tuple[int, Form]:
    """Class invariant for a definite form of either sign: (sign of a, reduced |q|)."""
    a, b, c = q
    if a > 0:
        return 1, reduce_form(q)
    return -1, reduce_form((-a, -b, -c))


def principal_form(D: int) -> Form:
    if D % 4 not in (0, 1):
        raise PreconditionError(f"{D} is not a discriminant")
    b = D % 2
    return Form(1, b, (b - D) // 4)


def reduced_forms(D: int) -> list[Form]:
    """All primitive reduced positive definite forms of discriminant D < 0."""
    if D >= 0 or D % 4 not in (0, 1):
        raise PreconditionError(f"{D} is not a negative discriminant")
    out = []
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            q = Form(a, b, c)
            if is_reduced(q) and is_primitive(q):
                out.append(q)
    return out


@dataclass(frozen=True)
class ArndtWitness:
    x1: int
    x2: int
    lam: tuple[int, int, int]
    raw: Form  # (a1, b1, c1), the form attached to the cube


def _exact(num: int, den: int, what: str) -> int:
    if den == 0 or num % den:
        raise PreconditionError(f"{what}: {num} not divisible by {den}")
    return num // den


def _check_pair(q2, q3) -> int:
    D = disc(q2)
    if disc(q3) != D:
        raise PreconditionError(f"discriminant mismatch: {D} vs {disc(q3)}")
    for q in (q2, q3):
        if not is_primitive(q):
            raise PreconditionError(f"form {tuple(q)} is not primitive")
        if q[0] == 0:
            raise PreconditionError(f"form {tuple(q)} has zero leading coefficient")
    return D


def compose_arndt(q2, q3) -> tuple[Form, ArndtWitness]:
    """Gauss composition via a single extended gcd.

    Returns a form in the class of ``[q2] + [q3]`` together with the
    intermediate values (``x1``, ``x2``, Bezout coefficients) and the raw
    first form of the corresponding cube.
    """
    D = _check_pair(q2, q3)
    a2, b2, c2 = q2
    a3, b3, c3 = q3
    s, d = (b2 + b3) // 2, (b2 - b3) // 2
    x1, lam = multi_gcd_bezout((-a3, -a2, s))
    x2 = lam[1] * d - lam[2] * c2
    cc = _exact(a2 * a3, x1 * x1, "a2*a3/x1^2")
    bb = b2 + _exact(2 * a2 * x2, x1, "2*a2*x2/x1")
    aa = _exact(bb * bb - D, 4 * cc, "(b1^2 - D)/(4*c1)")
    return Form(cc, bb, aa), ArndtWitness(x1, x2, lam, Form(aa, bb, cc))


def compose(q2, q3) -> Form:
    return compose_arndt(q2, q3)[0]


def compose_dirichlet(q2, q3) -> Form:
    """Dirichlet composition for forms with ``gcd(a2, a3, (b2+b3)/2) == 1``.

    Builds the common middle coefficient B with ``B = b2 mod 2a2``,
    ``B = b3 mod 2a3`` and ``B^2 = D mod 4 a2 a3``.
    """
    D = _check_pair(q2, q3)
    a2, b2, _ = q2
    a3, b3, _ = q3
    g, (mu, nu, om) = multi_gcd_bezout((a2, a3, (b2 + b3) // 2))
    if g != 1:
        raise PreconditionError(f"gcd(a2, a3, (b2+b3)/2) = {g} != 1; use compose_arndt")
    A = a2 * a3
    B = (mu * a2 * b3 + nu * a3 * b2 + om * (b2 * b3 + D) // 2) % (2 * abs(A))
    return Form(A, B, (B * B - D) // (4 * A))
