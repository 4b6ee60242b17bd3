"""Command-line front end with script-stable text I/O and exit codes.

Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 not linearly
recurrent, 4 oracle exhausted.
"""

from __future__ import annotations

import argparse
import sys

from .berlekamp import bm_modified, bm_usual
from .errors import (
    BadInput,
    NotLinearlyRecurrent,
    OracleExhausted,
    SeqMinPolyError,
)
from .field import field_from_text
from .hankel import first_failing_window, minpoly_hankel
from .lazy import default_verifier, lazy_minpoly, matrix_verifier
from .polynomial import Poly
from .sequences import (
    from_list,
    from_recurrence,
    krylov_oracle,
    parse_matrix,
    parse_vector,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_RECURRENT = 3
EXIT_ORACLE_EXHAUSTED = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc}") from exc


def _read_terms(field, path):
    return [field.parse(tok) for tok in _read_text(path).split()]


def _print_poly(poly: Poly, fmt: str):
    print(poly.to_pretty() if fmt == "pretty" else poly.to_ascending())


def cmd_minpoly(args) -> int:
    field = field_from_text(args.field)
    terms = _read_terms(field, args.sequence)
    need = 2 * args.n
    if len(terms) < need:
        raise BadInput(f"need at least {need} terms, file holds {len(terms)}")
    if len(terms) > need:
        print(
            f"warning: ignoring {len(terms) - need} extra terms", file=sys.stderr
        )
        terms = terms[:need]
    if args.algorithm == "usual":
        poly = bm_usual(field, args.n, terms)
    elif args.algorithm == "modified":
        poly = bm_modified(field, args.n, terms)
    else:
        poly = minpoly_hankel(field, terms, args.n)
    _print_poly(poly, args.format)
    return EXIT_OK


def cmd_lazy_minpoly(args) -> int:
    field = field_from_text(args.field)
    if args.matrix is not None:
        if args.u is None or args.v is None:
            raise BadInput("--matrix requires --u and --v")
        matrix = parse_matrix(field, _read_text(args.matrix))
        u = parse_vector(field, _read_text(args.u))
        v = parse_vector(field, _read_text(args.v))
        oracle = krylov_oracle(matrix, u, v)
        verifier = matrix_verifier(matrix, v)
    elif args.sequence is not None:
        oracle = from_list(_read_terms(field, args.sequence))
        verifier = default_verifier(args.extra)
    else:
        raise BadInput("need a sequence file or --matrix/--u/--v")
    poly = lazy_minpoly(oracle, field, args.m, l0=args.l0, verifier=verifier)
    _print_poly(poly, args.format)
    print(f"terms consumed: {oracle.terms_served}")
    return EXIT_OK


def cmd_generate(args) -> int:
    field = field_from_text(args.field)
    poly = Poly.parse_ascending(field, args.poly)
    init = [field.parse(t) for t in args.init.split()]
    oracle = from_recurrence(poly, init)
    print(" ".join(field.format(oracle.next_term()) for _ in range(args.count)))
    return EXIT_OK


def cmd_verify(args) -> int:
    field = field_from_text(args.field)
    poly = Poly.parse_ascending(field, args.poly)
    terms = _read_terms(field, args.sequence)
    j = first_failing_window(terms, poly)
    if j is None:
        return EXIT_OK
    print(f"verification failed at window {j}")
    return EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqminpoly",
        description="Minimal polynomials of linearly recurrent sequences "
        "over exact fields.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument(
            "--field",
            default="Q",
            help="coefficient field: 'Q' or 'gf:<prime>' (default Q)",
        )

    p = sub.add_parser("minpoly", help="batch minimal polynomial from 2n terms")
    add_common(p)
    p.add_argument(
        "--algorithm",
        choices=("usual", "modified", "hankel"),
        default="modified",
    )
    p.add_argument("-n", type=int, required=True, help="degree bound")
    p.add_argument(
        "--format", choices=("ascending", "pretty"), default="ascending"
    )
    p.add_argument("sequence", help="file of sequence terms ('-' for stdin)")
    p.set_defaults(func=cmd_minpoly)

    p = sub.add_parser(
        "lazy-minpoly", help="incremental minimal polynomial from an oracle"
    )
    add_common(p)
    p.add_argument("-m", type=int, required=True, help="degree bound")
    p.add_argument("--l0", type=int, default=None, help="initial half-length")
    p.add_argument(
        "--extra",
        type=int,
        default=2,
        help="extra terms drawn by the default verifier",
    )
    p.add_argument(
        "--format", choices=("ascending", "pretty"), default="ascending"
    )
    p.add_argument("--matrix", help="sparse matrix file for a Krylov oracle")
    p.add_argument("--u", help="projection vector file")
    p.add_argument("--v", help="seed vector file")
    p.add_argument(
        "sequence", nargs="?", help="file of sequence terms ('-' for stdin)"
    )
    p.set_defaults(func=cmd_lazy_minpoly)

    p = sub.add_parser("generate", help="run a recurrence forward")
    add_common(p)
    p.add_argument("--poly", required=True, help="ascending coefficients")
    p.add_argument("--init", default="", help="initial terms")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a generating polynomial")
    add_common(p)
    p.add_argument("--poly", required=True, help="ascending coefficients")
    p.add_argument("sequence", help="file of sequence terms ('-' for stdin)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotLinearlyRecurrent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_RECURRENT
    except OracleExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE_EXHAUSTED
    except SeqMinPolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
