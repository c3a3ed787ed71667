"""Exact solution of A x = b, nullspaces, and right inverses from unit systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .core import Matrix, ShapeError, Vector, mat_identity
from .rref import RrefDecomposition, apply_trace, rref

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Unique:
    x: Vector

    feasible = True
    kind = "unique"


@dataclass(frozen=True)
class Infinite:
    particular: Vector
    nullspace_basis: tuple

    feasible = True
    kind = "infinite"

    def __post_init__(self):
        if not self.nullspace_basis:
            raise ValueError("an infinite solution set needs a nonempty nullspace basis")


@dataclass(frozen=True)
class Infeasible:
    witness_row: int

    feasible = False
    kind = "infeasible"


SolveOutcome = Union[Unique, Infinite, Infeasible]


def _basis_from_rref(dec: RrefDecomposition, ncols: int) -> list[Vector]:
    R = dec.R
    pivot_set = set(dec.pivot_cols)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [_ZERO] * ncols
        v[f] = Fraction(1)
        for k, p in enumerate(dec.pivot_cols):
            if p < ncols:
                v[p] = -R[k, f]
        basis.append(Vector(ncols, tuple(v)))
    return basis


def nullspace_basis(A: Matrix) -> list[Vector]:
    """One basis vector per free column of rref(A); empty iff the columns are independent."""
    return _basis_from_rref(rref(A), A.cols)


def solve(A: Matrix, b: Vector) -> SolveOutcome:
    """Classify and solve A x = b by reducing the augmented matrix [A | b].

    Free variables are set to zero in the particular solution.
    """
    if A.rows != b.dim:
        raise ShapeError(f"system has {A.rows} equations but right-hand side has dim {b.dim}")
    n = A.cols
    dec = rref(A.augment(b))
    if dec.pivot_cols and dec.pivot_cols[-1] == n:
        # pivot in the augmented column: that row reads [0 ... 0 | 1]
        return Infeasible(dec.rank - 1)
    x = [_ZERO] * n
    for k, p in enumerate(dec.pivot_cols):
        x[p] = dec.R[k, n]
    particular = Vector(n, tuple(x))
    basis = _basis_from_rref(dec, n)
    if basis:
        return Infinite(particular, tuple(basis))
    return Unique(particular)


@dataclass(frozen=True)
class RightInverseResult:
    matrix: Matrix | None
    infeasible_index: int | None

    def __bool__(self):
        return self.matrix is not None


def right_inverse_detail(A: Matrix) -> RightInverseResult:
    """Solve A x = e_i for every i against one shared reduction of A.

    Replaying the reduction's trace on I gives the transformed right-hand
    sides T e_i. System i is feasible iff T e_i vanishes on every zero row
    of R; then the pivot variables read off T e_i and free ones are zero.
    """
    if not A.is_square:
        raise ShapeError(f"right inverse needs a square matrix, got {A.rows}x{A.cols}")
    n = A.rows
    dec = rref(A)
    T = apply_trace(dec.trace, mat_identity(n))
    for i in range(n):
        if any(T[r, i] for r in range(dec.rank, n)):
            return RightInverseResult(None, i)
    if dec.rank < n:
        # all e_i feasible forces n pivots for square A; checked, not assumed
        raise AssertionError("all unit systems feasible but rank < n")
    X = [[_ZERO] * n for _ in range(n)]
    for k, p in enumerate(dec.pivot_cols):
        X[p] = list(T.row(k))
    return RightInverseResult(Matrix._from_lists(n, n, X), None)


def right_inverse(A: Matrix) -> Matrix | None:
    """X with A X = I, or None when some A x = e_i is infeasible."""
    return right_inverse_detail(A).matrix


def combine_unit_solutions(S: Sequence[Vector], b: Vector) -> Vector:
    """Return sum_i b_i * s_i.

    If each s_i solves A x = e_i, linearity makes the result solve A x = b.
    """
    n = b.dim
    if len(S) != n:
        raise ShapeError(f"need {n} unit solutions for a right-hand side of dim {n}, got {len(S)}")
    for i, s in enumerate(S):
        if s.dim != n:
            raise ShapeError(f"unit solution {i} has dim {s.dim}, expected {n}")
    acc = [_ZERO] * n
    for bi, s in zip(b.entries, S):
        if bi:
            acc = [a + bi * x if x else a for a, x in zip(acc, s.entries)]
    return Vector(n, tuple(acc))
