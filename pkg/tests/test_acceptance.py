"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""
import itertools
import random
import time
from contextlib import contextmanager
from math import comb

from conftest import ACCEPTANCE_LINES
from oracles import cofactor_det, minors, random_matrix, random_sl2, transform_form
from wedgemap.adjoint import adjoint_norm, k_adjoint, pairing_A, represent_norm
from wedgemap.binforms import (
    class_key,
    compose,
    compose_arndt,
    compose_dirichlet,
    disc,
    is_primitive,
    principal_form,
    reduce_form,
    reduced_forms,
)
from wedgemap.cubes import BhargavaCube, build_cube, compose_cubes, cube_form, cube_forms, is_projective, plucker_of_cube
from wedgemap.errors import NotDecomposableError
from wedgemap.exterior import (
    PluckerVector,
    complementary_det,
    complementary_sign,
    dot,
    hat,
    hat_hat_sign,
    pairing,
    plucker_check,
    plucker_residue,
    wedge,
    wedge2,
)
from wedgemap.intlin import content, from_columns, matmul
from wedgemap.inversion import invert, invert_codim1, invert_complement, invert_rank2, transition_matrix


@contextmanager
def criterion(num, title, budget=None):
    t0 = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        detail = f"{elapsed:.3f}s"
        if budget is not None and elapsed >= budget:
            detail += f" (budget {budget}s exceeded)"
            raise AssertionError(f"criterion {num} took {elapsed:.3f}s, budget {budget}s")
        status = "PASS"
    finally:
        ACCEPTANCE_LINES.append(f"criterion {num:>2} {status}  {title}  [{detail or 'error'}]")


def test_c01_intro_example():
    with criterion(1, "intro wedge example, content 2"):
        X1 = from_columns([[1, 2, 2], [1, 0, 4]])
        X2 = from_columns([[0, 1, -1], [2, 0, 8]])
        best = min(_timed(lambda: wedge(X1)) for _ in range(20))
        a, b = wedge(X1), wedge(X2)
        assert a.coords == (-2, 2, 8) and a == b
        assert a.content() == 2
        assert best < 1e-3, best


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def test_c02_rank2_round_trip():
    rng = random.Random(2002)
    with criterion(2, "3000 grade-2 round trips, n=3..8", budget=10):
        zero_pivot = nonprimitive = 0
        for n in range(3, 9):
            for t in range(500):
                x = [rng.randint(-1000, 1000) for _ in range(n)]
                y = [rng.randint(-1000, 1000) for _ in range(n)]
                if t % 5 == 0:
                    x[0] = y[0] = 0  # all of X_1j vanish
                if t % 7 == 0:
                    c = rng.randint(2, 9)
                    x = [c * v for v in x]
                Y = wedge2(x, y)
                if Y.is_zero():
                    continue
                zero_pivot += Y.coords[0] == 0
                nonprimitive += Y.content() > 1
                assert wedge(invert(Y)) == Y
        assert zero_pivot > 0 and nonprimitive > 0


def test_c03_membership():
    rng = random.Random(2003)
    with criterion(3, "relations characterise decomposables (200 + 200)"):
        for _ in range(200):
            n = rng.randint(3, 8)
            c = rng.randint(1, 20)
            x = [rng.randint(-100, 100) for _ in range(n)]
            y = [rng.randint(-100, 100) for _ in range(n)]
            Y = wedge2(x, y).scale(c)
            if Y.is_zero():
                continue
            assert plucker_check(Y) == []
            r = invert_rank2(Y)
            assert wedge2(r.x, r.y) == Y
        rejected = 0
        while rejected < 200:
            n = rng.randint(4, 8)
            Y = PluckerVector(n, 2, tuple(rng.randint(-20, 20) for _ in range(comb(n, 2))))
            bad = plucker_check(Y)
            if not bad or Y.is_zero():
                continue
            try:
                invert_rank2(Y)
            except NotDecomposableError as e:
                assert e.quadruple in bad
                assert plucker_residue(Y, *e.quadruple) != 0
            else:
                raise AssertionError(f"non-member accepted: {Y}")
            rejected += 1


def test_c04_class_group_23():
    with criterion(4, "D=-23 class group is cyclic of order 3", budget=1):
        forms = reduced_forms(-23)
        assert sorted(forms) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]
        e, g, h = (1, 1, 6), (2, 1, 3), (2, -1, 3)
        table = {(p, q): reduce_form(compose(p, q)) for p in forms for q in forms}
        # cyclic group generated by g: g^0 = e, g^1 = g, g^2 = h
        power = {e: 0, g: 1, h: 2}
        for (p, q), r in table.items():
            assert power[r] == (power[p] + power[q]) % 3
        assert table[g, g] == h


def _valid_discriminants(lo, hi):
    return [D for D in range(hi, lo - 1, -1) if D % 4 in (0, 1)]


def test_c05_group_laws_all_discriminants():
    rng = random.Random(2005)
    with criterion(5, "group laws for all D in [-500,-3]", budget=60):
        dirichlet_checks = 0
        for D in _valid_discriminants(-500, -3):
            forms = reduced_forms(D)
            e = principal_form(D)
            assert e in forms
            table = {}
            for p, q in itertools.product(forms, repeat=2):
                r, w = compose_arndt(p, q)
                rr = reduce_form(r)
                assert disc(r) == D and is_primitive(r)
                table[p, q] = rr
                if w.x1 == 1:
                    assert reduce_form(compose_dirichlet(p, q)) == rr
                    dirichlet_checks += 1
                for _ in range(20):
                    p2 = transform_form(p, random_sl2(rng, 4, 2))
                    q2 = transform_form(q, random_sl2(rng, 4, 2))
                    r2, w2 = compose_arndt(p2, q2)
                    assert reduce_form(r2) == rr
                    if w2.x1 == 1:
                        assert reduce_form(compose_dirichlet(p2, q2)) == rr
                        dirichlet_checks += 1
            for p in forms:
                assert table[e, p] == p == table[p, e]
                assert table[p, reduce_form((p[0], -p[1], p[2]))] == e
            for p, q, s in itertools.product(forms, repeat=3):
                assert table[table[p, q], s] == table[p, table[q, s]]
        assert dirichlet_checks > 0


def _random_pair(rng):
    """Two primitive forms of a shared discriminant, definite or indefinite."""
    if rng.random() < 0.6:
        D = rng.choice(_valid_discriminants(-2000, -3))
        fs = reduced_forms(D)
        q2 = transform_form(rng.choice(fs), random_sl2(rng, 5, 3))
        q3 = transform_form(rng.choice(fs), random_sl2(rng, 5, 3))
    else:
        while True:
            q2 = (rng.randint(-60, 60), rng.randint(-60, 60), rng.randint(-60, 60))
            D = disc(q2)
            if D > 0 and int(D**0.5) ** 2 != D and is_primitive(q2):
                break
        q3 = transform_form(q2, random_sl2(rng, 5, 3))
        if rng.random() < 0.5:
            q3 = compose(q2, q3)
    if rng.random() < 0.2:
        q3 = tuple(-v for v in q3)
    return q2, q3


def test_c06_cube_construction():
    rng = random.Random(2006)
    with criterion(6, "build_cube reproduces Q2, Q3 on 1000 pairs"):
        done = 0
        while done < 1000:
            q2, q3 = _random_pair(rng)
            if q2[0] == 0 or q3[0] == 0:
                continue
            A = build_cube(q2, q3)
            assert cube_form(A, 2) == tuple(q2) and cube_form(A, 3) == tuple(q3)
            assert disc(cube_form(A, 1)) == disc(q2)
            done += 1
        A = build_cube((2, 1, 3), (2, 1, 3))
        assert cube_form(A, 1) == (9, -11, 4)
        q1p, _ = compose_arndt((2, 1, 3), (2, 1, 3))
        assert q1p == (4, -11, 9) and reduce_form(q1p) == (2, -1, 3)


def test_c07_cube_invariants():
    rng = random.Random(2007)
    with criterion(7, "1000 random cubes: Pfaffian, shared disc, class sum zero"):
        definite = 0
        for _ in range(1000):
            A = BhargavaCube.from_entries([rng.randint(-50, 50) for _ in range(8)])
            X12, X13, X14, X23, X24, X34 = plucker_of_cube(A).coords
            assert X12 * X34 - X13 * X24 + X14 * X23 == 0
            forms = cube_forms(A)
            D = disc(forms[0])
            assert disc(forms[1]) == disc(forms[2]) == D
            if D < 0 and is_projective(A):
                definite += 1
                total = compose(compose(forms[0], forms[1]), forms[2])
                assert class_key(total) == (1, principal_form(D))
        assert definite > 50


def test_c08_cube_composition():
    rng = random.Random(2008)
    with criterion(8, "cube composition is classwise on all three forms"):
        buckets = {}
        for _ in range(40000):
            A = BhargavaCube.from_entries([rng.randint(-5, 5) for _ in range(8)])
            D = disc(cube_form(A, 1))
            if D < 0 and is_projective(A):
                buckets.setdefault(D, []).append(A)
        pairs = [(rng.choice(v), rng.choice(v)) for v in buckets.values() for _ in range(3)]
        assert len(pairs) >= 200
        for A, B in pairs:
            C = compose_cubes(A, B)
            for i in (1, 2, 3):
                assert class_key(cube_form(C, i)) == class_key(compose(cube_form(A, i), cube_form(B, i)))


def test_c09_duality_and_pairings():
    rng = random.Random(2009)
    with criterion(9, "hat involution, Cauchy-Binet, complementary det, adjoint pairing"):
        for n in range(1, 9):
            for k in range(n + 1):
                Y = PluckerVector(n, k, tuple(rng.randint(-99, 99) for _ in range(comb(n, k))))
                assert hat(hat(Y)) == Y.scale(hat_hat_sign(n))
        for _ in range(500):
            n = rng.randint(1, 6)
            k = rng.randint(1, min(3, n))
            X, Y = random_matrix(rng, n, k), random_matrix(rng, n, k)
            assert pairing(X, Y) == sum(a * b for a, b in zip(minors(X, k), minors(Y, k)))
        for _ in range(500):
            n = rng.randint(2, 6)
            k = rng.randint(1, min(3, n - 1))
            X, W = random_matrix(rng, n, k), random_matrix(rng, n, n - k)
            d = complementary_det(X, W)
            assert d == cofactor_det([a + b for a, b in zip(X, W)])
            assert d == complementary_sign(n, k) * dot(wedge(X), hat(wedge(W)))
        for _ in range(500):
            n = rng.randint(1, 6)
            k = rng.randint(1, min(3, n))
            X, Y = random_matrix(rng, n, k, -5, 5), random_matrix(rng, n, k, -5, 5)
            A = random_matrix(rng, n, n, -5, 5)
            Ah = k_adjoint(A, k)
            x, y = minors(X, k), minors(Y, k)
            assert pairing_A(X, Y, A) == sum(Ah[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(y)))


def test_c10_transition_matrix():
    rng = random.Random(2010)
    with criterion(10, "transition matrix recovers M; preimages differ by SL2"):
        done = 0
        while done < 200:
            k = rng.randint(1, 4)
            n = rng.randint(k, 7)
            A = random_matrix(rng, n, k, -6, 6)
            if content(wedge(A).coords) != 1:
                continue
            M = random_matrix(rng, k, k, -5, 5)
            t = cofactor_det(M)
            if t == 0:
                continue
            E = matmul(A, M)
            H = transition_matrix(A, E)
            assert matmul(A, H) == E and cofactor_det(H) == t
            done += 1
        done = 0
        while done < 200:
            n = rng.randint(2, 7)
            x = [rng.randint(-100, 100) for _ in range(n)]
            y = [rng.randint(-100, 100) for _ in range(n)]
            Y = wedge2(x, y)
            if Y.content() != 1:
                continue
            P = [from_columns([x, y]), invert_rank2(Y).system, invert_rank2(Y, reduce_x2=False).system]
            for S, T in itertools.combinations(P, 2):
                H = transition_matrix(S, T)
                assert cofactor_det(H) == 1 and matmul(S, H) == T
            done += 1


def test_c11_complement_and_codim1():
    rng = random.Random(2011)
    with criterion(11, "codim-1 and complement inversion are coordinate-exact"):
        done = 0
        while done < 500:
            n = rng.randint(2, 7)
            Y = wedge(random_matrix(rng, n, n - 1, -9, 9))
            if Y.is_zero():
                continue
            assert wedge(invert_codim1(Y)) == Y
            done += 1
        done = 0
        while done < 500:
            n = rng.randint(3, 7)
            k = rng.randint(1, (n - 1) // 2)
            W = random_matrix(rng, n, k, -9, 9)
            if rng.random() < 0.3:
                W = [[3 * v for v in row] for row in W]
            w = wedge(W)
            if w.is_zero():
                continue
            assert wedge(invert_complement(W)) == hat(w)
            done += 1


def test_c12_norm_preservation():
    rng = random.Random(2012)
    with criterion(12, "det of represented Gram matrix equals adjoint norm"):
        done = 0
        while done < 200:
            n = rng.randint(2, 6)
            B = random_matrix(rng, n, n, -3, 3)
            if cofactor_det(B) == 0:
                continue
            A = matmul([list(r) for r in zip(*B)], B)
            k = rng.choice(sorted({1, 2, n - 2, n - 1, n} - {0}))
            x = wedge(random_matrix(rng, n, k, -5, 5))
            if x.is_zero():
                continue
            G = represent_norm(x, A)
            assert cofactor_det(G) == adjoint_norm(x, A)
            done += 1
