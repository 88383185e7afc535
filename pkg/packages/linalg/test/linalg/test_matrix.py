import pytest
from linalg.matrix import IntMatrix, ShapeError, block_diagonal, hstack, vstack


def test_from_rows():
    actual = IntMatrix.from_rows([[1, 2], [3, 4]])

    expected = IntMatrix(rows=2, cols=2, entries=(1, 2, 3, 4))

    assert actual == expected


def test_from_rows_ragged():
    with pytest.raises(ShapeError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_entries_length_checked():
    with pytest.raises(ValueError):
        IntMatrix(rows=2, cols=2, entries=(1, 2, 3))


def test_from_columns():
    actual = IntMatrix.from_columns([(1, 1), (1, -1)])

    expected = IntMatrix.from_rows([[1, 1], [1, -1]])

    assert actual == expected


def test_empty_shapes():
    assert IntMatrix.from_rows([], cols=3).shape == (0, 3)
    assert IntMatrix.from_columns([], rows=3).shape == (3, 0)
    assert IntMatrix.from_rows([], cols=3).transpose().shape == (3, 0)
    assert IntMatrix.from_columns([], rows=3).transpose().shape == (0, 3)


def test_matmul():
    A = IntMatrix.from_rows([[1, 2], [3, 4]])
    B = IntMatrix.from_rows([[0, 1], [1, 0]])

    expected = IntMatrix.from_rows([[2, 1], [4, 3]])

    assert A @ B == expected


def test_matmul_shape_mismatch():
    with pytest.raises(ShapeError):
        IntMatrix.identity(2) @ IntMatrix.identity(3)


def test_matmul_empty_inner_dimension():
    A = IntMatrix.from_columns([], rows=2)
    B = IntMatrix.from_rows([], cols=3)

    assert A @ B == IntMatrix.zero(2, 3)


def test_arithmetic():
    A = IntMatrix.from_rows([[1, 2], [3, 4]])

    assert A - A == IntMatrix.zero(2, 2)
    assert A + A == A.scale(2)
    assert -A == A.scale(-1)
    assert A.apply((1, -1)) == (-1, -1)


def test_transpose():
    A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])

    expected = IntMatrix.from_rows([[1, 4], [2, 5], [3, 6]])

    assert A.transpose() == expected


def test_determinant_is_exact():
    big = 10**40
    A = IntMatrix.from_rows([[big, 1], [big - 1, 1]])

    assert A.determinant() == 1
    assert IntMatrix.from_rows([], cols=0).determinant() == 1


def test_unimodular():
    assert IntMatrix.from_rows([[1, 1], [0, 1]]).is_unimodular()
    assert not IntMatrix.from_rows([[2, 0], [0, 1]]).is_unimodular()


def test_permutation_matrix():
    assert IntMatrix.from_rows([[0, 1], [1, 0]]).is_permutation_matrix()
    assert not IntMatrix.from_rows([[0, -1], [1, 0]]).is_permutation_matrix()
    assert not IntMatrix.from_rows([[1, 1], [0, 0]]).is_permutation_matrix()


def test_rank():
    assert IntMatrix.from_rows([[1, 2], [2, 4]]).rank() == 1
    assert IntMatrix.zero(0, 3).rank() == 0


def test_block_diagonal():
    actual = block_diagonal([IntMatrix.identity(1), IntMatrix.from_rows([[-1]])])

    expected = IntMatrix.from_rows([[1, 0], [0, -1]])

    assert actual == expected


def test_stacks():
    A = IntMatrix.from_rows([[1], [2]])
    B = IntMatrix.from_rows([[3], [4]])

    assert hstack([A, B], rows=2) == IntMatrix.from_rows([[1, 3], [2, 4]])
    assert vstack([A, B], cols=1) == IntMatrix.from_rows([[1], [2], [3], [4]])

    with pytest.raises(ShapeError):
        hstack([A, IntMatrix.identity(1)], rows=2)
