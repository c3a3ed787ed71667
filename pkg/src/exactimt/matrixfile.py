"""Plain-text matrix files.

Format::

    # comment lines start with '#'; blank lines are ignored
    rows cols
    a11 a12 ...
    ...

Entries are ``p``, ``-p`` or ``p/q``.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

from .core import Matrix, parse_rational


class MatrixFileError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def _tokens(line: str):
    """Yield (1-based column, token) pairs for whitespace-separated tokens."""
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def parse_matrix_file(text: str) -> Matrix:
    lines = [
        (no, line)
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixFileError("missing 'rows cols' header", 1)
    hno, header = lines[0]
    htoks = list(_tokens(header))
    if len(htoks) != 2:
        raise MatrixFileError(f"header must be 'rows cols', got {header.strip()!r}", hno)
    dims = []
    for col, tok in htoks:
        if not tok.isdigit():
            raise MatrixFileError(f"dimension {tok!r} is not a non-negative integer", hno, col)
        dims.append(int(tok))
    rows, cols = dims

    body = lines[1:]
    entries: list[Fraction] = []
    for k, (no, line) in enumerate(body):
        if k >= rows:
            raise MatrixFileError(f"unexpected extra row; header declares {rows} rows", no)
        toks = list(_tokens(line))
        if len(toks) != cols:
            where = toks[cols][0] if len(toks) > cols else len(line.rstrip()) + 1
            raise MatrixFileError(f"expected {cols} entries, found {len(toks)}", no, where)
        for col, tok in toks:
            try:
                entries.append(parse_rational(tok))
            except ZeroDivisionError:
                raise MatrixFileError(f"zero denominator in {tok!r}", no, col) from None
            except ValueError:
                raise MatrixFileError(f"malformed rational literal {tok!r}", no, col) from None
    if len(body) < rows and cols > 0:
        last = text.count("\n") + 1
        raise MatrixFileError(f"expected {rows} rows, found {len(body)}", last)
    if cols == 0:
        return Matrix(rows, 0, ())
    return Matrix(rows, cols, tuple(entries))


def format_matrix_file(M: Matrix, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{M.rows} {M.cols}")
    out.extend(" ".join(str(x) for x in M.row(i)) for i in range(M.rows) if M.cols)
    return "\n".join(out) + "\n"


def matrix_digest(*mats: Matrix) -> str:
    """sha256 over the canonical file form, so comments and spacing don't matter."""
    h = hashlib.sha256()
    for M in mats:
        h.update(format_matrix_file(M).encode())
    return "sha256:" + h.hexdigest()
