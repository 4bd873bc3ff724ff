import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.errors import OverflowBoundError, SizeMismatchError
from src.oracle.fp_linalg import (
    FpMatrix,
    IncrementalRowSpace,
    inverse_mod,
    matmul_mod,
    rank_and_nullspace,
    rank_mod,
    rref_mod,
)
from tests.property.settings import STANDARD_SETTINGS


def random_matrix(seed, rows, cols, p, density=0.5):
    rng = np.random.default_rng(seed)
    A = rng.integers(0, p, size=(rows, cols))
    A[rng.random((rows, cols)) > density] = 0
    return A


def test_rank_and_nullspace_example():
    assert rank_and_nullspace(np.array([[1, 2], [2, 4]]), 5) == (1, [(3, 1)])


def test_rref_example():
    R, pivots = rref_mod(np.array([[0, 2, 4], [1, 1, 1], [1, 3, 5]]), 7)
    assert pivots == [0, 1]
    assert R.tolist() == [[1, 0, 6], [0, 1, 2]]
    assert rank_mod(np.zeros((3, 4), dtype=np.int64), 3) == 0


def test_rref_prime_bound():
    with pytest.raises(OverflowBoundError):
        rref_mod(np.eye(2, dtype=np.int64), 2**31)


def test_inverse_mod():
    assert inverse_mod(np.array([[1, 1], [0, 1]]), 3).tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ValueError):
        inverse_mod(np.array([[1, 2], [2, 4]]), 5)
    with pytest.raises(SizeMismatchError):
        inverse_mod(np.ones((2, 3), dtype=np.int64), 5)


@pytest.mark.parametrize("p,k", [(5, 40), (2**31 - 1, 1), (2**31 - 1, 3), (2**61 - 1, 4)])
def test_matmul_mod_matches_python_ints(p, k):
    rng = np.random.default_rng(k)
    A = rng.integers(0, min(p, 2**62), size=(3, k), dtype=np.int64) % p
    B = rng.integers(0, min(p, 2**62), size=(k, 2), dtype=np.int64) % p
    expected = [[sum(int(A[i, t]) * int(B[t, j]) for t in range(k)) % p for j in range(2)] for i in range(3)]
    assert matmul_mod(A, B, p).tolist() == expected


def test_matmul_shape_mismatch():
    with pytest.raises(SizeMismatchError):
        matmul_mod(np.ones((2, 3), dtype=np.int64), np.ones((2, 3), dtype=np.int64), 3)


def test_fp_matrix():
    a = FpMatrix(np.array([[4, -1], [0, 6]]), 5)
    assert a.tolist() == [[4, 4], [0, 1]]
    assert (a.rows, a.cols) == (2, 2)
    with pytest.raises(ValueError):
        a.entries[0, 0] = 1
    with pytest.raises(TypeError):
        hash(a)
    swap = FpMatrix(np.array([[0, 1], [1, 0]]), 3)
    assert swap.power(2).is_identity()
    assert swap @ swap == FpMatrix.identity(2, 3)
    assert (swap - swap) == FpMatrix.zeros(2, 2, 3)
    assert (swap + swap).tolist() == [[0, 2], [2, 0]]
    with pytest.raises(SizeMismatchError):
        swap @ FpMatrix.identity(2, 5)
    with pytest.raises(SizeMismatchError):
        FpMatrix(np.arange(3), 3)


@given(seed=st.integers(0, 10**6), rows=st.integers(1, 8), cols=st.integers(1, 8), p=st.sampled_from([3, 5, 7]))
@STANDARD_SETTINGS
def test_nullspace_is_a_kernel_basis(seed, rows, cols, p):
    M = random_matrix(seed, rows, cols, p)
    rank, basis = rank_and_nullspace(M, p)
    assert rank + len(basis) == cols
    for x in basis:
        assert not np.any(M @ np.array(x, dtype=np.int64) % p)
    if basis:
        assert rank_mod(np.array(basis), p) == len(basis)


@given(seed=st.integers(0, 10**6), n=st.integers(1, 6), p=st.sampled_from([3, 5, 7]))
@STANDARD_SETTINGS
def test_inverse_when_invertible(seed, n, p):
    A = random_matrix(seed, n, n, p, density=1.0)
    if rank_mod(A, p) < n:
        with pytest.raises(ValueError):
            inverse_mod(A, p)
        return
    assert (matmul_mod(A, inverse_mod(A, p), p) == np.eye(n, dtype=np.int64)).all()


@given(
    seed=st.integers(0, 10**6),
    cols=st.integers(1, 12),
    blocks=st.lists(st.integers(1, 5), min_size=1, max_size=5),
    p=st.sampled_from([3, 5, 7]),
)
@STANDARD_SETTINGS
def test_incremental_row_space_matches_full_elimination(seed, cols, blocks, p):
    parts = [random_matrix(seed + i, rows, cols, p, density=0.3) for i, rows in enumerate(blocks)]
    space = IncrementalRowSpace(cols, p)
    growth = [space.add_rows(block) for block in parts]
    stacked = np.concatenate(parts, axis=0)
    R, pivots = rref_mod(stacked, p)
    assert space.rank == rank_mod(stacked, p) == sum(growth)
    assert list(space.pivots) == pivots
    assert space._basis.tolist() == R.tolist()


def test_incremental_row_space_shape_check():
    with pytest.raises(SizeMismatchError):
        IncrementalRowSpace(3, 5).add_rows(np.ones((2, 4), dtype=np.int64))
