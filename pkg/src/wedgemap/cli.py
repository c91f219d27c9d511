"""Command-line interface.

Exit codes: 0 success, 1 malformed input, 2 mathematical precondition
failure. Results go to stdout, one-line diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import adjoint, binforms, cubes, exterior, intlin, inversion
from .errors import NotDecomposableError, PreconditionError, ShapeError
from .fileio import format_matrix, format_plucker, parse_matrix, parse_plucker


class _Failure(Exception):
    def __init__(self, code: int, kind: str, reason: str):
        self.code, self.kind, self.reason = code, kind, reason


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Failure(1, "usage", message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise _Failure(1, "io", str(e)) from None


def _stringify(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _plucker_json(Y):
    return {"n": Y.n, "k": Y.k, "coords": list(Y.coords)}


def _matrix_json(M):
    return {"rows": len(M), "cols": len(M[0]) if M else 0, "entries": M}


def _form_line(q) -> str:
    return " ".join(map(str, q))


def cmd_wedge(args):
    Y = exterior.wedge(parse_matrix(_read(args.file)))
    return format_plucker(Y), _plucker_json(Y), 0


def cmd_invert(args):
    X = inversion.invert(parse_plucker(_read(args.file)))
    return format_matrix(X), _matrix_json(X), 0


def cmd_dual(args):
    Z = exterior.hat(parse_plucker(_read(args.file)))
    return format_plucker(Z), _plucker_json(Z), 0


def cmd_check(args):
    bad = exterior.plucker_check(parse_plucker(_read(args.file)))
    text = "".join(" ".join(map(str, q)) + "\n" for q in bad)
    code = 2 if bad else 0
    return text, {"violations": [list(q) for q in bad]}, code


def cmd_hnf(args):
    H, U = intlin.hnf(parse_matrix(_read(args.file)))
    return format_matrix(H) + format_matrix(U), {"H": _matrix_json(H), "U": _matrix_json(U)}, 0


def cmd_kernel(args):
    K = intlin.kernel_basis(parse_matrix(_read(args.file)))
    return format_matrix(K), _matrix_json(K), 0


def cmd_compose(args):
    q2 = binforms.Form(*args.coeffs[:3])
    q3 = binforms.Form(*args.coeffs[3:])
    q, w = binforms.compose_arndt(q2, q3)
    definite = q.disc < 0 and q.a > 0
    if args.mode == "reduced" and not definite:
        raise PreconditionError("reduction requires a positive definite result")
    if args.mode in ("reduced", "auto") and definite:
        q = binforms.reduce_form(q)
    data = {"form": list(q), "disc": q.disc, "x1": w.x1, "x2": w.x2, "lambda": list(w.lam)}
    return _form_line(q) + "\n", data, 0


def cmd_cube_build(args):
    A = cubes.build_cube(args.coeffs[:3], args.coeffs[3:])
    return str(A) + "\n", {"x": list(A.x), "y": list(A.y)}, 0


def cmd_cube_forms(args):
    A = cubes.BhargavaCube.from_entries(args.entries)
    forms = cubes.cube_forms(A)
    discs = {binforms.disc(q) for q in forms}
    if len(discs) != 1:
        # cannot happen for integer cubes; guard against a broken identity
        raise PreconditionError(f"cube forms disagree on discriminant: {sorted(discs)}")
    D = discs.pop()
    text = "".join(_form_line(q) + "\n" for q in forms) + f"disc {D}\n"
    return text, {"forms": [list(q) for q in forms], "disc": D}, 0


def cmd_cube_compose(args):
    A = cubes.BhargavaCube.from_entries(args.entries[:8])
    B = cubes.BhargavaCube.from_entries(args.entries[8:])
    C = cubes.compose_cubes(A, B)
    return str(C) + "\n", {"x": list(C.x), "y": list(C.y)}, 0


def cmd_adjoint(args):
    Ah = adjoint.k_adjoint(parse_matrix(_read(args.file)), args.k)
    return format_matrix(Ah), _matrix_json(Ah), 0


def cmd_transition(args):
    A = parse_matrix(_read(args.file_a))
    E = parse_matrix(_read(args.file_e))
    H = inversion.transition_matrix(A, E)
    t = intlin.det(H)
    return format_matrix(H) + f"det {t}\n", {"H": _matrix_json(H), "det": t}, 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wedgemap", description="Integer wedge map inversion and Gauss composition.")
    p.add_argument("--json", action="store_true", help="emit JSON with integers as decimal strings")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def file_cmd(name, fn, help, arg="file"):
        s = sub.add_parser(name, help=help)
        s.add_argument(arg, nargs="?", default="-", help="input file ('-' for stdin)")
        s.set_defaults(fn=fn)
        return s

    file_cmd("wedge", cmd_wedge, "Plücker coordinates of the columns of a matrix")
    file_cmd("invert", cmd_invert, "a matrix whose columns wedge to the given vector")
    file_cmd("dual", cmd_dual, "duality (hat) map")
    file_cmd("check", cmd_check, "list violated grade-2 Plücker relations")
    file_cmd("hnf", cmd_hnf, "column Hermite normal form H = A U; prints H then U")
    file_cmd("kernel", cmd_kernel, "saturated integer kernel basis")
    s = file_cmd("adjoint", cmd_adjoint, "k-adjoint (matrix of k x k minors)")
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("compose", help="compose two binary quadratic forms")
    s.add_argument("coeffs", type=int, nargs=6, metavar="INT")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--raw", dest="mode", action="store_const", const="raw")
    g.add_argument("--reduced", dest="mode", action="store_const", const="reduced")
    s.set_defaults(fn=cmd_compose, mode="auto")

    s = sub.add_parser("cube-build", help="cube realizing two forms as its 2nd and 3rd forms")
    s.add_argument("coeffs", type=int, nargs=6, metavar="INT")
    s.set_defaults(fn=cmd_cube_build)

    s = sub.add_parser("cube-forms", help="the three forms of a cube")
    s.add_argument("entries", type=int, nargs=8, metavar="INT")
    s.set_defaults(fn=cmd_cube_forms)

    s = sub.add_parser("cube-compose", help="compose two projective cubes")
    s.add_argument("entries", type=int, nargs=16, metavar="INT")
    s.set_defaults(fn=cmd_cube_compose)

    s = sub.add_parser("transition", help="matrix H with A H = E (Gauss/Lemma transition)")
    s.add_argument("file_a")
    s.add_argument("file_e")
    s.set_defaults(fn=cmd_transition)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        try:
            text, data, code = args.fn(args)
        except NotDecomposableError as e:
            q = ",".join(map(str, e.quadruple)) if e.quadruple else "-"
            raise _Failure(2, "not-decomposable", f"quadruple={q} {e.reason}") from None
        except PreconditionError as e:
            raise _Failure(2, "precondition", e.reason) from None
        except ShapeError as e:
            raise _Failure(1, "malformed", str(e)) from None
    except _Failure as f:
        print(f"error {f.kind}: {f.reason}", file=sys.stderr)
        return f.code
    if args.json:
        sys.stdout.write(json.dumps(_stringify(data)) + "\n")
    else:
        sys.stdout.write(text)
    if code:
        print(f"error violations: {len(data.get('violations', []))} Plücker relations fail", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
