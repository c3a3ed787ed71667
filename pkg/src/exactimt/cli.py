"""Command-line front end.

Exit status:
    0  success (invertible / feasible where that applies)
    1  internal disagreement between routes that must agree
    2  singular matrix or infeasible system, correctly detected
    3  usage, input or engine error
"""

from __future__ import annotations

import argparse
import hashlib
import sys

from . import report
from .core import Matrix, ShapeError, Vector
from .generators import GenConfig, random_invertible, random_with_rank
from .matrixfile import MatrixFileError, format_matrix_file, matrix_digest, parse_matrix_file
from .rref import rref
from .solver import right_inverse_detail, solve
from .verifier import DEFAULT_PROBES, imt_report, two_sided_check

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_SINGULAR = 2
EXIT_ERROR = 3


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_matrix(path: str, stdin) -> Matrix:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return parse_matrix_file(text)
    except MatrixFileError as exc:
        raise CliError(f"{path}: {exc}") from None


def _as_vector(M: Matrix, n: int, path: str) -> Vector:
    if M.cols == 1 and M.rows == n:
        return M.column(0)
    if M.rows == 1 and M.cols == n:
        return Vector(n, M.row(0))
    raise CliError(f"{path}: right-hand side is {M.rows}x{M.cols}, expected {n}x1")


def _cmd_rref(args, stdin):
    A = _read_matrix(args.matrix, stdin)
    dec = rref(A)
    doc = report.document("rref", matrix_digest(A), report.rref_result(dec, args.trace))
    return doc, EXIT_OK


def _cmd_solve(args, stdin):
    A = _read_matrix(args.matrix, stdin)
    B = _read_matrix(args.rhs, stdin)
    b = _as_vector(B, A.rows, args.rhs)
    outcome = solve(A, b)
    doc = report.document("solve", matrix_digest(A, B), report.solve_result(outcome))
    return doc, EXIT_OK if outcome.feasible else EXIT_SINGULAR


def _cmd_inverse(args, stdin):
    A = _read_matrix(args.matrix, stdin)
    if not A.is_square:
        raise CliError(f"inverse needs a square matrix, got {A.rows}x{A.cols}")
    res = right_inverse_detail(A)
    check = two_sided_check(A, res.matrix) if res.matrix is not None else None
    doc = report.document("inverse", matrix_digest(A), report.inverse_result(res, check))
    if check is None:
        return doc, EXIT_SINGULAR
    if check.ab_is_identity and check.ba_is_identity:
        return doc, EXIT_OK
    return doc, EXIT_DISAGREE


def _cmd_imt(args, stdin):
    A = _read_matrix(args.matrix, stdin)
    if not A.is_square:
        raise CliError(f"imt needs a square matrix, got {A.rows}x{A.cols}")
    rep = imt_report(A, probes=args.probes, seed=args.seed)
    doc = report.document("imt", matrix_digest(A), report.imt_result(rep, args.seed))
    if not rep.verdict:
        return doc, EXIT_DISAGREE
    return doc, EXIT_OK if rep.invertible else EXIT_SINGULAR


def _cmd_gen(args, stdin):
    cfg = GenConfig(seed=args.seed, n=args.size, entry_bound=args.bound, op_count=args.ops)
    if args.rank is None:
        M = random_invertible(cfg)
        r = args.size
    else:
        M = random_with_rank(cfg, args.rank)
        r = args.rank
    params = f"gen seed={args.seed} size={args.size} rank={r} ops={cfg.ops} bound={args.bound}"
    digest = "sha256:" + hashlib.sha256(params.encode()).hexdigest()
    doc = report.document("gen", digest, {
        "seed": args.seed, "size": args.size, "rank": r, "matrix": report.encode_matrix(M),
    })
    doc["_matrix_file"] = format_matrix_file(M, comment=params)
    return doc, EXIT_OK


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted both before and after the subcommand.
    def add_globals(p, defaults: bool):
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        p.add_argument("--json", action="store_true", default=d(False), help="emit a JSON report")
        p.add_argument("--seed", type=_nonneg, default=d(0), help="seed for generation and random probes")
        p.add_argument("--probes", type=_nonneg, default=d(DEFAULT_PROBES),
                       help="random right-hand sides tried by imt (default %(default)s)")

    parser = _Parser(prog="exactimt", description="Exact rational linear algebra and invertible-matrix checks.")
    add_globals(parser, True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("rref", help="reduced row-echelon form, pivots and rank")
    p.add_argument("matrix", help="matrix file ('-' for stdin)")
    p.add_argument("--trace", action="store_true", help="list the row operations")
    p.set_defaults(func=_cmd_rref)
    add_globals(p, False)

    p = sub.add_parser("solve", help="solve A x = b exactly")
    p.add_argument("matrix")
    p.add_argument("rhs", help="right-hand side as an n x 1 (or 1 x n) matrix file")
    p.set_defaults(func=_cmd_solve)
    add_globals(p, False)

    p = sub.add_parser("inverse", help="right inverse via A x = e_i, plus two-sided check")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_inverse)
    add_globals(p, False)

    p = sub.add_parser("imt", help="evaluate the eight invertible matrix theorem statements")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_imt)
    add_globals(p, False)

    p = sub.add_parser("gen", help="emit a seeded random matrix in matrix-file format")
    p.add_argument("--size", type=_nonneg, required=True)
    p.add_argument("--rank", type=_nonneg, default=None, help="exact rank (default: invertible)")
    p.add_argument("--ops", type=_nonneg, default=None, help="row operations (default 4 * size)")
    p.add_argument("--bound", type=int, default=5, help="entry bound for the generator")
    p.set_defaults(func=_cmd_gen)
    add_globals(p, False)
    return parser


def run_command(argv, stdout=None, stderr=None, stdin=None) -> tuple[int, dict | None]:
    """Run one CLI invocation; returns (exit status, report document or None)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_ERROR), None
    try:
        doc, status = args.func(args, stdin)
    except CliError as exc:
        print(f"exactimt: error: {exc}", file=stderr)
        return EXIT_ERROR, None
    except (ShapeError, ValueError, ZeroDivisionError) as exc:
        print(f"exactimt: error: {exc}", file=stderr)
        return EXIT_ERROR, None
    matrix_text = doc.pop("_matrix_file", None)
    if args.json:
        stdout.write(report.dumps(doc))
    elif matrix_text is not None:
        stdout.write(matrix_text)
    else:
        stdout.write(report.render_text(doc))
    return status, doc


def main(argv=None) -> int:
    status, _ = run_command(sys.argv[1:] if argv is None else argv)
    return status


if __name__ == "__main__":
    sys.exit(main())
