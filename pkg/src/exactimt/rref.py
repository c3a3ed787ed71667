"""Gauss-Jordan reduction with a replayable row-operation trace.

Row equivalence is certified by the trace itself; no elementary matrices
are ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .core import Matrix, to_rational


@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def describe(self) -> str:
        return f"swap R{self.i} <-> R{self.j}"


@dataclass(frozen=True)
class Scale:
    row: int
    factor: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factor", to_rational(self.factor))
        if self.factor == 0:
            raise ValueError(f"scale factor for row {self.row} must be nonzero")

    def describe(self) -> str:
        return f"R{self.row} <- ({self.factor}) * R{self.row}"


@dataclass(frozen=True)
class AddMultiple:
    target: int
    source: int
    factor: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factor", to_rational(self.factor))
        if self.target == self.source:
            raise ValueError(f"add_multiple cannot use row {self.target} as both target and source")

    def describe(self) -> str:
        return f"R{self.target} <- R{self.target} + ({self.factor}) * R{self.source}"


RowOp = Union[Swap, Scale, AddMultiple]


@dataclass(frozen=True)
class RrefDecomposition:
    R: Matrix
    pivot_cols: tuple
    rank: int
    trace: tuple


def _apply_op(data: list[list], op: RowOp) -> None:
    if isinstance(op, Swap):
        data[op.i], data[op.j] = data[op.j], data[op.i]
    elif isinstance(op, Scale):
        f = op.factor
        data[op.row] = [f * x if x else x for x in data[op.row]]
    elif isinstance(op, AddMultiple):
        f = op.factor
        if f:
            data[op.target] = [a + f * b if b else a for a, b in zip(data[op.target], data[op.source])]
    else:
        raise TypeError(f"not a row operation: {op!r}")


def _rows_touched(op: RowOp) -> tuple:
    if isinstance(op, Swap):
        return (op.i, op.j)
    if isinstance(op, Scale):
        return (op.row,)
    if isinstance(op, AddMultiple):
        return (op.target, op.source)
    raise TypeError(f"not a row operation: {op!r}")


def apply_trace(trace: Iterable[RowOp], M: Matrix) -> Matrix:
    """Replay row operations on M in order and return the result."""
    data = M.to_lists()
    for k, op in enumerate(trace):
        for r in _rows_touched(op):
            if not 0 <= r < M.rows:
                raise IndexError(f"trace step {k} ({op!r}) uses row {r}; matrix has {M.rows} rows")
        if isinstance(op, Scale) and op.factor == 0:
            raise ValueError(f"trace step {k} scales row {op.row} by zero")
        _apply_op(data, op)
    return Matrix._from_lists(M.rows, M.cols, data)


def rref(A: Matrix) -> RrefDecomposition:
    m, n = A.rows, A.cols
    data = A.to_lists()
    trace: list[RowOp] = []
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if data[i][c]), None)
        if p is None:
            continue
        if p != r:
            op = Swap(r, p)
            _apply_op(data, op)
            trace.append(op)
        piv = data[r][c]
        if piv != 1:
            op = Scale(r, 1 / piv)
            _apply_op(data, op)
            trace.append(op)
        for i in range(m):
            if i != r and data[i][c]:
                op = AddMultiple(i, r, -data[i][c])
                _apply_op(data, op)
                trace.append(op)
        pivots.append(c)
        r += 1
    return RrefDecomposition(Matrix._from_lists(m, n, data), tuple(pivots), len(pivots), tuple(trace))


def rank(A: Matrix) -> int:
    return rref(A).rank


def is_rref(M: Matrix) -> bool:
    """Check the four RREF conditions directly on M."""
    last = -1
    seen_zero = False
    for i in range(M.rows):
        row = M.row(i)
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            seen_zero = True
            continue
        if seen_zero or lead <= last or row[lead] != 1:
            return False
        if any(M[k, lead] for k in range(M.rows) if k != i):
            return False
        last = lead
    return True
