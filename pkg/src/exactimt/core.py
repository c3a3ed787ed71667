"""Exact rational scalars and immutable dense matrices/vectors.

Scalars are :class:`fractions.Fraction`, which already keeps the canonical
reduced form (positive denominator, gcd 1, zero as 0/1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

_LITERAL = re.compile(r"([+-]?[0-9]+)(?:/([0-9]+))?")
_ZERO = Fraction(0)
_ONE = Fraction(1)


class ShapeError(ValueError):
    """Operands have incompatible shapes."""


def rational_normalize(numerator: int, denominator: int) -> Fraction:
    if denominator == 0:
        raise ZeroDivisionError(f"zero denominator in {numerator}/{denominator}")
    return Fraction(numerator, denominator)


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or literal such as ``"-3/4"`` to a Fraction.

    Floats are refused: they would smuggle rounding into an exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q`` (integers only, no decimals)."""
    m = _LITERAL.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"malformed rational literal {text!r}")
    return rational_normalize(int(m[1]), int(m[2]) if m[2] else 1)


@dataclass(frozen=True)
class Vector:
    dim: int
    entries: tuple

    def __post_init__(self):
        if not all(type(x) is Fraction for x in self.entries):
            object.__setattr__(self, "entries", tuple(to_rational(x) for x in self.entries))
        if len(self.entries) != self.dim:
            raise ShapeError(f"vector declares dim {self.dim} but has {len(self.entries)} entries")

    @classmethod
    def of(cls, values: Iterable) -> Vector:
        ent = tuple(to_rational(v) for v in values)
        return cls(len(ent), ent)

    @classmethod
    def zeros(cls, n: int) -> Vector:
        return cls(n, (_ZERO,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> Vector:
        if not 0 <= i < n:
            raise IndexError(f"unit index {i} out of range for dim {n}")
        return cls(n, tuple(_ONE if k == i else _ZERO for k in range(n)))

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return self.dim

    def __add__(self, other: Vector) -> Vector:
        if self.dim != other.dim:
            raise ShapeError(f"cannot add vectors of dim {self.dim} and {other.dim}")
        return Vector(self.dim, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> Vector:
        c = to_rational(c)
        return Vector(self.dim, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "[" + ", ".join(str(x) for x in self.entries) + "]"


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions. Instances are never mutated."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")
        if not all(type(x) is Fraction for x in self.entries):
            object.__setattr__(self, "entries", tuple(to_rational(x) for x in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeError(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(to_rational(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int | None = None) -> Matrix:
        if rows is None:
            rows = columns[0].dim if columns else 0
        for j, c in enumerate(columns):
            if c.dim != rows:
                raise ShapeError(f"column {j} has dim {c.dim}, expected {rows}")
        k = len(columns)
        return cls(rows, k, tuple(columns[j][i] for i in range(rows) for j in range(k)))

    @classmethod
    def _from_lists(cls, rows: int, cols: int, data: list[list]) -> Matrix:
        return cls(rows, cols, tuple(x for r in data for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return Vector(self.rows, self.entries[j::self.cols])

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        if not self.is_square:
            return False
        n = self.cols
        return all(x == (i % (n + 1) == 0) for i, x in enumerate(self.entries))

    def augment(self, b: Vector) -> Matrix:
        if b.dim != self.rows:
            raise ShapeError(f"cannot augment {self.rows}x{self.cols} matrix with vector of dim {b.dim}")
        data = [list(self.row(i)) + [b[i]] for i in range(self.rows)]
        return Matrix._from_lists(self.rows, self.cols + 1, data)

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return mat_vec(self, other)
        return mat_mul(self, other)

    def __sub__(self, other: Matrix) -> Matrix:
        return mat_sub(self, other)

    def __add__(self, other: Matrix) -> Matrix:
        _same_shape(self, other, "add")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __str__(self):
        if self.rows == 0:
            return f"[] ({self.rows}x{self.cols})"
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _same_shape(A: Matrix, B: Matrix, what: str) -> None:
    if A.shape != B.shape:
        raise ShapeError(f"cannot {what} {A.rows}x{A.cols} and {B.rows}x{B.cols} matrices")


def mat_identity(n: int) -> Matrix:
    if n < 0:
        raise ValueError(f"identity size must be >= 0, got {n}")
    return Matrix(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bcols = [B.entries[j::B.cols] for j in range(B.cols)] if B.rows else [()] * B.cols
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        nz = [(k, a) for k, a in enumerate(arow) if a]
        for col in bcols:
            s = _ZERO
            for k, a in nz:
                b = col[k]
                if b:
                    s += a * b
            out.append(s)
    return Matrix(A.rows, B.cols, tuple(out))


def mat_vec(A: Matrix, x: Vector) -> Vector:
    if A.cols != x.dim:
        raise ShapeError(f"cannot multiply {A.rows}x{A.cols} matrix by vector of dim {x.dim}")
    out = []
    for i in range(A.rows):
        s = _ZERO
        for a, b in zip(A.row(i), x.entries):
            if a and b:
                s += a * b
        out.append(s)
    return Vector(A.rows, tuple(out))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B, "subtract")
    return Matrix(A.rows, A.cols, tuple(a - b for a, b in zip(A.entries, B.entries)))
