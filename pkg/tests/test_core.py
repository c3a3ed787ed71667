from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactimt import Matrix, ShapeError, Vector, mat_identity, mat_mul, mat_sub, parse_rational, rational_normalize
from exactimt.generators import random_matrix

from oracles import adjugate_inverse, as_rows, matmul_rows


def canonical(x):
    return x.denominator > 0 and gcd(abs(x.numerator), x.denominator) == 1


@pytest.mark.parametrize("num,den,expected", [(2, 4, F(1, 2)), (3, -6, F(-1, 2)), (0, 7, F(0))])
def test_rational_normalize(num, den, expected):
    r = rational_normalize(num, den)
    assert r == expected
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)


def test_canonical_zero():
    z = rational_normalize(0, -7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_zero_denominator_is_an_error():
    with pytest.raises(ZeroDivisionError):
        rational_normalize(1, 0)
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")


@pytest.mark.parametrize("bad", ["", "1.5", "1/", "/2", "1/-2", "a", "1 2", "1//2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_floats_refused():
    with pytest.raises(TypeError):
        Matrix.from_rows([[0.5]])


@given(st.integers(-50, 50), st.integers(1, 30), st.integers(-50, 50), st.integers(1, 30))
def test_addition_round_trip(a, b, c, d):
    assert rational_normalize(a * d + c * b, b * d) == rational_normalize(a, b) + rational_normalize(c, d)


def test_identity_shapes():
    assert mat_identity(1) == Matrix.from_rows([[1]])
    assert mat_identity(3).to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    I0 = mat_identity(0)
    assert I0.shape == (0, 0) and I0.entries == ()
    assert mat_mul(I0, I0) == I0
    assert I0.is_identity()


def test_mat_mul_examples():
    I2 = mat_identity(2)
    assert mat_mul(I2, I2) == I2
    A = Matrix.from_rows([[1, 2], [3, 4]])
    B = Matrix.from_rows([[F(x) for x in r] for r in adjugate_inverse(as_rows(A))])
    assert B == Matrix.from_rows([[-2, 1], ["3/2", "-1/2"]])
    assert mat_mul(A, B) == I2
    ones = Matrix.from_rows([[1, 1], [1, 1]])
    assert mat_mul(ones, Matrix.from_rows([[1], [-1]])) == Matrix.zeros(2, 1)


def test_mat_mul_shape_error_names_shapes():
    with pytest.raises(ShapeError, match="2x3.*2x3"):
        mat_mul(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


def test_mat_sub():
    I2 = mat_identity(2)
    assert mat_sub(I2, I2).is_zero()
    assert mat_sub(Matrix.from_rows([[1, 2], [3, 4]]), I2) == Matrix.from_rows([[0, 2], [3, 3]])
    with pytest.raises(ShapeError):
        mat_sub(I2, mat_identity(3))


def test_matrix_invariants_enforced():
    with pytest.raises(ShapeError):
        Matrix(2, 2, (F(1),) * 3)
    with pytest.raises(ShapeError):
        Vector(3, (F(1),))
    M = Matrix(1, 2, (2, "4/6"))
    assert M.entries == (F(2), F(2, 3))


def test_matrices_are_immutable():
    M = mat_identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3


def test_mul_with_empty_inner_dimension():
    P = Matrix.zeros(3, 0)
    Q = Matrix.zeros(0, 2)
    assert mat_mul(P, Q) == Matrix.zeros(3, 2)


@pytest.mark.parametrize("seed", range(40))
def test_mul_against_schoolbook_and_associativity(seed):
    m, k, p, q = 1 + seed % 4, 1 + seed % 5, 1 + seed % 3, 2
    A = random_matrix(seed, m, k)
    B = random_matrix(seed + 1000, k, p)
    C = random_matrix(seed + 2000, p, q)
    AB = mat_mul(A, B)
    assert as_rows(AB) == matmul_rows(as_rows(A), as_rows(B))
    assert mat_mul(AB, C) == mat_mul(A, mat_mul(B, C))
    assert all(canonical(x) for x in AB.entries)
    assert mat_mul(A, mat_identity(k)) == A
    assert mat_mul(mat_identity(m), A) == A


def test_transpose_and_columns():
    A = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.transpose() == Matrix.from_rows([[1, 4], [2, 5], [3, 6]])
    assert A.column(1) == Vector.of([2, 5])
    assert Matrix.from_columns(A.columns()) == A
