"""
Test linear algebra over finite fields.
"""
from coverdepth import *
from utility import G1, G2
import numpy as np
import pytest


# ---------------------------
# standard tests for pytest
# ---------------------------

@pytest.fixture(params=[2, 3, 4, 5])
def field(request):
    return field_of_order(request.param)


def test_rref_binary():
    """
    Check that generators already in reduced form are left alone.
    """
    F2 = make_field(2)
    for rows, expected in [(G1, [0, 3, 7]), (G2, [0, 1, 3])]:
        M = MatrixGF(F2, rows)
        R, rank, pivots = rref(M)
        assert rank == 3
        assert pivots == expected
        assert R == M


def test_rref_canonical(field):
    """
    Check that the reduced form only depends on the row space.
    """
    rng = np.random.default_rng(field.q)
    for _ in range(10):
        M = MatrixGF(field, rng.integers(0, field.q, size=(3, 6)))
        A = random_invertible_matrix(field, 3, rng)
        R1, rank1, pivots1 = rref(M)
        R2, rank2, pivots2 = rref(A @ M)
        assert rank1 == rank2 == M.rank()
        assert pivots1 == pivots2
        assert R1 == R2
        assert same_row_space(M, A @ M)


def test_rank_of_columns():
    M = MatrixGF(make_field(2), G1)
    assert rank_of_columns(M, 0) == 0
    assert rank_of_columns(M, [0, 1, 2]) == 1
    assert rank_of_columns(M, [0, 3]) == 2
    assert rank_of_columns(M, 0b10001001) == 3
    with pytest.raises(ValueError):
        rank_of_columns(M, [12])
    with pytest.raises(ValueError):
        rank_of_columns(M, 1 << 12)


def test_kernel_dimension_on_support():
    """
    Check the dimension of subcodes supported on column sets.
    """
    G = MatrixGF(make_field(2), G1)
    assert kernel_dimension_on_support(G, []) == 0
    assert kernel_dimension_on_support(G, [0, 1, 2]) == 1
    assert kernel_dimension_on_support(G, [0, 1]) == 0
    assert kernel_dimension_on_support(G, range(7)) == 2
    assert kernel_dimension_on_support(G, range(12)) == 3


def test_same_row_space():
    F2 = make_field(2)
    A = MatrixGF(F2, G1)
    B = MatrixGF(F2, [G1[0], [a ^ b for a, b in zip(G1[0], G1[1])], G1[2]])
    assert same_row_space(A, B)
    assert not same_row_space(A, MatrixGF(F2, G2))
    assert not same_row_space(A, MatrixGF(F2, G1[:2]))
    with pytest.raises(ValueError):
        same_row_space(A, MatrixGF(make_field(3), G1))


def test_rank_nullity(field):
    """
    Check that the null space is annihilated and has the right
    dimension.
    """
    rng = np.random.default_rng(10 + field.q)
    for rows in range(0, 5):
        M = MatrixGF(field, rng.integers(0, field.q, size=(rows, 6)), cols=6)
        H = M.null_space()
        assert H.cols == 6
        assert M.rank() + H.rows == 6
        assert H.rank() == H.rows
        assert (M @ H.transpose()).is_zero()


def test_matmul_errors():
    A = MatrixGF(make_field(2), [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        A @ MatrixGF(make_field(3), [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        A @ MatrixGF(make_field(2), [[1, 0, 1]])
    with pytest.raises(ValueError):
        MatrixGF(make_field(2), [[0, 2]])


def test_span_insert(field):
    """
    Check that the span label does not depend on the order in which
    vectors are inserted.
    """
    rng = np.random.default_rng(20 + field.q)
    for _ in range(10):
        vectors = rng.integers(0, field.q, size=(4, 4)).tolist()
        state1 = SpanState(field, 4)
        state2 = SpanState(field, 4)
        increases = 0
        for v in vectors:
            state1, increased = span_insert(state1, v)
            increases += increased
        for v in reversed(vectors):
            span_insert(state2, v)
        assert state1.rank == increases == MatrixGF(field, vectors).rank()
        assert state1.key() == state2.key()
        assert all(v in state1 for v in vectors)


def test_span_copy():
    F3 = make_field(3)
    V = SpanState(F3, 3)
    V.insert([1, 2, 0])
    W = V.copy()
    assert W.insert([0, 0, 1])
    assert not W.insert([1, 2, 2])
    assert V.rank == 1 and W.rank == 2
    assert [0, 0, 1] not in V
    assert [2, 1, 0] in V
    with pytest.raises(ValueError):
        V.insert([1, 0])


def test_span_full():
    F2 = make_field(2)
    V = SpanState(F2, 2)
    for v in ([1, 1], [1, 1], [0, 1]):
        V.insert(v)
    assert V.is_full
    assert V.key() == ((1, 0), (0, 1))
