from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactimt import AddMultiple, Matrix, Scale, Swap, apply_trace, mat_identity, rank, rref
from exactimt.generators import GenConfig, random_matrix, random_with_rank
from exactimt.rref import is_rref

from oracles import as_rows, rank_by_minors


def test_identity_is_already_reduced():
    dec = rref(mat_identity(3))
    assert dec.R == mat_identity(3)
    assert dec.pivot_cols == (0, 1, 2)
    assert dec.rank == 3
    assert dec.trace == ()


def test_all_ones():
    dec = rref(Matrix.from_rows([[1, 1], [1, 1]]))
    assert dec.R == Matrix.from_rows([[1, 1], [0, 0]])
    assert dec.pivot_cols == (0,)
    assert dec.rank == 1


def test_antidiagonal_hand_elimination():
    # by hand: swap rows, then scale each by the reciprocal of its pivot
    dec = rref(Matrix.from_rows([[0, 2], [3, 0]]))
    assert dec.R == mat_identity(2)
    assert dec.pivot_cols == (0, 1)
    assert dec.trace == (Swap(0, 1), Scale(0, F(1, 3)), Scale(1, F(1, 2)))


def test_empty_and_degenerate_shapes():
    for rows, cols in [(0, 0), (0, 3), (3, 0)]:
        dec = rref(Matrix.zeros(rows, cols))
        assert dec.rank == 0 and dec.trace == () and dec.R == Matrix.zeros(rows, cols)


@pytest.mark.parametrize("M,expected", [
    (mat_identity(4), 4),
    (Matrix.zeros(3, 3), 0),
    (Matrix.from_rows([[1, 2], [2, 4]]), 1),
])
def test_rank(M, expected):
    assert rank(M) == expected


def test_apply_trace_basics():
    M = Matrix.from_rows([["1/2"], [7]])
    assert apply_trace([], M) == M
    assert apply_trace([Swap(0, 1)], M) == Matrix.from_rows([[7], ["1/2"]])


def test_apply_trace_errors():
    M = mat_identity(2)
    with pytest.raises(IndexError):
        apply_trace([Swap(0, 2)], M)
    with pytest.raises(IndexError):
        apply_trace([AddMultiple(-1, 0, 1)], M)
    with pytest.raises(ValueError):
        Scale(0, 0)
    with pytest.raises(ValueError):
        AddMultiple(1, 1, 2)
    # a zero factor smuggled past construction is still refused on replay
    bad = Scale(0, 1)
    object.__setattr__(bad, "factor", F(0))
    with pytest.raises(ValueError):
        apply_trace([bad], M)


def test_zero_rows_sink_via_recorded_swaps():
    A = Matrix.from_rows([[0, 0], [0, 1], [0, 0], [1, 0]])
    dec = rref(A)
    assert dec.R == Matrix.from_rows([[1, 0], [0, 1], [0, 0], [0, 0]])
    assert any(isinstance(op, Swap) for op in dec.trace)
    assert apply_trace(dec.trace, A) == dec.R


def test_rank_matches_minor_oracle():
    for seed in range(60):
        rows, cols = 1 + seed % 4, 1 + (seed // 4) % 4
        A = random_matrix(seed, rows, cols, entry_bound=1)
        assert rank(A) == rank_by_minors(as_rows(A), cols)


def test_exact_rank_instances_match_minor_oracle():
    for n in range(1, 5):
        for r in range(n + 1):
            A = random_with_rank(GenConfig(seed=100 * n + r, n=n), r)
            assert rank_by_minors(as_rows(A), n) == r == rank(A)


def test_square_bridge_pivot_every_column_iff_every_row():
    for seed in range(50):
        n = 1 + seed % 6
        A = random_with_rank(GenConfig(seed=seed, n=n), seed % (n + 1))
        dec = rref(A)
        every_col = len(dec.pivot_cols) == n
        every_row = all(any(dec.R.row(i)) for i in range(n))
        assert every_col == every_row == (dec.rank == n)


entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_dim=5):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    vals = draw(st.lists(entries, min_size=rows * cols, max_size=rows * cols))
    return Matrix(rows, cols, tuple(vals))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_properties(A):
    dec = rref(A)
    assert is_rref(dec.R)
    assert list(dec.pivot_cols) == sorted(set(dec.pivot_cols))
    assert dec.rank == len(dec.pivot_cols) <= min(A.rows, A.cols)
    assert dec.rank == sum(1 for i in range(A.rows) if any(dec.R.row(i)))
    assert apply_trace(dec.trace, A) == dec.R
    again = rref(dec.R)
    assert again.R == dec.R and again.trace == ()


@settings(max_examples=100, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_row_permutation_invariance(A, rnd):
    order = list(range(A.rows))
    rnd.shuffle(order)
    P = Matrix._from_lists(A.rows, A.cols, [list(A.row(i)) for i in order])
    assert rref(P).R == rref(A).R


def test_is_rref_detects_violations():
    assert is_rref(Matrix.from_rows([[1, 0, 2], [0, 1, 3]]))
    assert not is_rref(Matrix.from_rows([[2, 0], [0, 1]]))
    assert not is_rref(Matrix.from_rows([[1, 1], [0, 1]]))
    assert not is_rref(Matrix.from_rows([[0, 0], [1, 0]]))
    assert not is_rref(Matrix.from_rows([[0, 1], [1, 0]]))
