# built in modules
from itertools import product

# installed modules
import numpy as np
import pytest
from hypothesis import given, strategies as st

# project modules
from bilch.gf2 import BitMatrix, nullspace_basis, rank, row_space_contains, solve


@st.composite
def bit_matrices(draw, max_rows=7, max_cols=12):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(0, max_cols))
    entries = draw(st.lists(
        st.lists(st.integers(0, 1), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    return BitMatrix.from_rows(entries, cols)


def test_entries_across_byte_boundary():
    row = [0] * 11
    row[9] = 1
    M = BitMatrix([row, [1] + [0] * 10])
    assert M.shape == (2, 11)
    assert M[0, 9] == 1
    assert M[0, 8] == 0
    assert M[1, 0] == 1
    assert M.to_dense().tolist() == [row, [1] + [0] * 10]


def test_invalid_entries():
    with pytest.raises(ValueError):
        BitMatrix([[0, 2]])
    with pytest.raises(ValueError):
        BitMatrix([1, 0, 1])
    with pytest.raises(ValueError):
        BitMatrix([[1, 0]], shape=(2, 1))


def test_empty_shapes():
    assert rank(BitMatrix.zeros(0, 4)) == 0
    assert len(nullspace_basis(BitMatrix.zeros(0, 4))) == 4
    assert nullspace_basis(BitMatrix.zeros(3, 0)) == []
    assert BitMatrix.from_rows([], 3).shape == (0, 3)


def test_rank_examples():
    assert rank(BitMatrix(np.eye(10, dtype=np.uint8))) == 10
    assert rank(BitMatrix([[1, 1], [1, 1]])) == 1
    assert rank(BitMatrix([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2


def test_nullspace_follows_free_columns():
    basis = nullspace_basis(BitMatrix([[1, 1, 0], [0, 0, 1]]))
    assert [v.tolist() for v in basis] == [[1, 1, 0]]


def test_solve_sets_free_variables_to_zero():
    assert solve(BitMatrix([[1, 1]]), [1]).tolist() == [1, 0]


def test_solve_inconsistent():
    assert solve(BitMatrix([[1, 0], [1, 0]]), [1, 0]) is None


def test_solve_length_mismatch():
    with pytest.raises(ValueError):
        solve(BitMatrix([[1, 0], [0, 1]]), [1, 0, 1])


def test_row_space_contains():
    M = BitMatrix([[1, 1, 0], [0, 1, 1]])
    assert row_space_contains(M, [1, 0, 1])
    assert not row_space_contains(M, [1, 0, 0])
    assert row_space_contains(BitMatrix.zeros(0, 3), [0, 0, 0])
    assert not row_space_contains(BitMatrix.zeros(0, 3), [0, 1, 0])


def test_dot():
    M = BitMatrix([[1, 0, 1], [0, 1, 1]])
    assert M.dot([1, 1, 1]).tolist() == [0, 0]
    assert M.dot([1, 0, 0]).tolist() == [1, 0]
    with pytest.raises(ValueError):
        M.dot([1, 0])


@given(bit_matrices())
def test_rank_of_transpose(M):
    assert rank(M) == rank(M.transpose())
    assert rank(M) <= min(M.shape)


@given(bit_matrices())
def test_nullspace_is_kernel_basis(M):
    basis = nullspace_basis(M)
    assert len(basis) == M.cols - rank(M)
    for v in basis:
        assert not M.dot(v).any()
    if basis:
        assert rank(BitMatrix(np.vstack(basis), shape=(len(basis), M.cols))) \
            == len(basis)


@given(bit_matrices(), st.data())
def test_solve_consistent_systems(M, data):
    x = data.draw(st.lists(st.integers(0, 1), min_size=M.cols,
                           max_size=M.cols))
    b = M.dot(x)
    y = solve(M, b)
    assert y is not None
    assert np.array_equal(M.dot(y), b)


@given(bit_matrices(max_cols=10), st.data())
def test_solve_agrees_with_brute_force(M, data):
    b = np.array(data.draw(st.lists(st.integers(0, 1), min_size=M.rows,
                                    max_size=M.rows)), dtype=np.uint8)
    reachable = any(np.array_equal(M.dot(x), b)
                    for x in product((0, 1), repeat=M.cols))
    y = solve(M, b)
    assert (y is not None) == reachable
    if y is not None:
        assert np.array_equal(M.dot(y), b)
