"""Two-sidedness checks and the eight-way invertible matrix theorem report.

Every predicate in :func:`imt_report` goes through its own lower-level
route, so agreement between them is evidence rather than a tautology.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Union

from .core import Matrix, ShapeError, Vector, mat_identity, mat_mul, mat_sub, mat_vec
from .generators import SplitMix64, random_vector
from .rref import rref, rank
from .solver import Unique, combine_unit_solutions, nullspace_basis, right_inverse, solve

DEFAULT_PROBES = 25

PREDICATES = (
    "invertible",
    "row_equiv_identity",
    "feasible_all_b",
    "pivot_every_row",
    "columns_independent",
    "trivial_nullspace",
    "columns_span",
    "columns_basis",
)


@dataclass(frozen=True)
class TwoSidedReport:
    ab_is_identity: bool
    ba_is_identity: bool
    ab: Matrix
    ba: Matrix
    z_matrix: Matrix
    offending_column: int | None
    # A @ z_j == 0 for the offending column; None when there is none
    offending_in_nullspace: bool | None


def two_sided_check(A: Matrix, B: Matrix) -> TwoSidedReport:
    """Measure AB and BA independently; report Z = BA - I and its first nonzero column."""
    if not (A.is_square and B.is_square and A.shape == B.shape):
        raise ShapeError(f"two-sided check needs square matrices of one size, got "
                         f"{A.rows}x{A.cols} and {B.rows}x{B.cols}")
    n = A.rows
    ab = mat_mul(A, B)
    ba = mat_mul(B, A)
    Z = mat_sub(ba, mat_identity(n))
    j = next((j for j in range(n) if not Z.column(j).is_zero()), None)
    in_null = None if j is None else mat_vec(A, Z.column(j)).is_zero()
    return TwoSidedReport(
        ab_is_identity=ab.is_identity(),
        ba_is_identity=ba.is_identity(),
        ab=ab,
        ba=ba,
        z_matrix=Z,
        offending_column=j,
        offending_in_nullspace=in_null,
    )


@dataclass(frozen=True)
class Independent:
    pivot_count: int


@dataclass(frozen=True)
class Dependent:
    witness: Vector


IndependenceCertificate = Union[Independent, Dependent]


def independence_certificate(A: Matrix) -> IndependenceCertificate:
    basis = nullspace_basis(A)
    if basis:
        x = basis[0]
        if not mat_vec(A, x).is_zero():
            raise AssertionError("nullspace witness does not satisfy A x = 0")
        return Dependent(x)
    return Independent(A.cols)


@dataclass(frozen=True)
class ImtReport:
    n: int
    invertible: bool
    row_equiv_identity: bool
    feasible_all_b: bool
    pivot_every_row: bool
    columns_independent: bool
    trivial_nullspace: bool
    columns_span: bool
    columns_basis: bool
    inverse: Matrix | None
    trace: tuple | None
    nullspace_vector: Vector | None
    infeasible_b: Vector | None
    probes: int
    probes_feasible: int
    # False when the random-b probes contradict the unit-system certificate
    probes_consistent: bool

    def predicates(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in PREDICATES}

    @property
    def verdict(self) -> bool:
        values = set(self.predicates().values())
        return len(values) == 1 and self.probes_consistent


def _invertible(A: Matrix):
    X = right_inverse(A)
    return X is not None, X


def _row_equiv_identity(A: Matrix):
    dec = rref(A)
    ok = dec.R == mat_identity(A.rows)
    return ok, dec.trace if ok else None


def _feasible_all_b(A: Matrix, probes: int, seed: int):
    # Deterministic certificate: every unit system A x = e_i solvable means
    # A x = b is solvable for all b, via x = sum b_i s_i.
    n = A.rows
    unit_solutions = []
    infeasible_b = None
    for i in range(n):
        e = Vector.unit(n, i)
        out = solve(A, e)
        if not out.feasible:
            infeasible_b = e
            break
        unit_solutions.append(out.x if isinstance(out, Unique) else out.particular)
    certificate = infeasible_b is None

    rng = SplitMix64(seed)
    feasible = 0
    consistent = True
    for _ in range(probes):
        b = random_vector(rng, n)
        if solve(A, b).feasible:
            feasible += 1
        elif certificate:
            consistent = False
        if certificate and mat_vec(A, combine_unit_solutions(unit_solutions, b)) != b:
            consistent = False
    return certificate, infeasible_b, feasible, consistent


def _pivot_every_row(A: Matrix):
    R = rref(A).R
    return all(any(R.row(i)) for i in range(R.rows))


def _columns_independent(A: Matrix):
    basis = nullspace_basis(A)
    return not basis, (basis[0] if basis else None)


def _trivial_nullspace(A: Matrix):
    return isinstance(solve(A, Vector.zeros(A.rows)), Unique)


def _columns_span(A: Matrix):
    return rank(A) == A.rows


def imt_report(A: Matrix, probes: int = DEFAULT_PROBES, seed: int = 0, parallel: bool = False) -> ImtReport:
    """Evaluate the eight invertible-matrix-theorem statements for square A.

    ``probes`` random right-hand sides (seeded by ``seed``) back up the
    unit-system certificate for "A x = b is feasible for every b".
    With ``parallel`` the predicates run on a thread pool; results are
    identical to sequential evaluation.
    """
    if not A.is_square:
        raise ShapeError(f"invertible matrix theorem needs a square matrix, got {A.rows}x{A.cols}")
    if probes < 0:
        raise ValueError(f"probe count must be >= 0, got {probes}")
    jobs = {
        "invertible": (_invertible, (A,)),
        "row_equiv_identity": (_row_equiv_identity, (A,)),
        "feasible_all_b": (_feasible_all_b, (A, probes, seed)),
        "pivot_every_row": (_pivot_every_row, (A,)),
        "columns_independent": (_columns_independent, (A,)),
        "trivial_nullspace": (_trivial_nullspace, (A,)),
        "columns_span": (_columns_span, (A,)),
    }
    if parallel:
        with ThreadPoolExecutor() as pool:
            futures = {k: pool.submit(f, *args) for k, (f, args) in jobs.items()}
            res = {k: fut.result() for k, fut in futures.items()}
    else:
        res = {k: f(*args) for k, (f, args) in jobs.items()}

    invertible, inverse = res["invertible"]
    row_equiv, trace = res["row_equiv_identity"]
    feasible, infeasible_b, probes_ok, consistent = res["feasible_all_b"]
    independent, null_vec = res["columns_independent"]
    span = res["columns_span"]
    return ImtReport(
        n=A.rows,
        invertible=invertible,
        row_equiv_identity=row_equiv,
        feasible_all_b=feasible,
        pivot_every_row=res["pivot_every_row"],
        columns_independent=independent,
        trivial_nullspace=res["trivial_nullspace"],
        columns_span=span,
        columns_basis=independent and span,
        inverse=inverse,
        trace=trace,
        nullspace_vector=null_vec,
        infeasible_b=infeasible_b,
        probes=probes,
        probes_feasible=probes_ok,
        probes_consistent=consistent,
    )
