from linalg.matrix import IntMatrix
from linalg.normal_forms import hnf, snf


def test_snf_example():
    A = IntMatrix.from_rows([[2, 4], [6, 8]])

    actual = snf(A)

    assert actual.D == IntMatrix.diagonal([2, 4])
    assert actual.U @ A @ actual.V == actual.D
    assert abs(actual.U.determinant()) == 1
    assert abs(actual.V.determinant()) == 1


def test_snf_identity():
    actual = snf(IntMatrix.identity(2))

    assert actual.D == IntMatrix.identity(2)


def test_snf_zero():
    actual = snf(IntMatrix.zero(2, 2))

    assert actual.D == IntMatrix.zero(2, 2)
    assert actual.U == IntMatrix.identity(2)
    assert actual.V == IntMatrix.identity(2)


def test_snf_needs_divisibility_fix():
    A = IntMatrix.diagonal([2, 3])

    actual = snf(A)

    assert actual.diagonal == (1, 6)
    assert actual.U @ A @ actual.V == actual.D


def test_snf_rectangular():
    A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])

    actual = snf(A)

    assert actual.diagonal == (2, 6, 12)
    assert actual.U @ A @ actual.V == actual.D


def test_snf_empty():
    A = IntMatrix.zero(0, 3)

    actual = snf(A)

    assert actual.D == A
    assert actual.U == IntMatrix.identity(0)
    assert actual.V == IntMatrix.identity(3)


def test_snf_deterministic():
    A = IntMatrix.from_rows([[3, -5, 7], [9, 1, 1], [4, 4, -2]])

    assert snf(A) == snf(A)


def test_hnf_permutation():
    H, U = hnf(IntMatrix.from_rows([[0, 1], [1, 0]]))

    assert H == IntMatrix.identity(2)
    assert U == IntMatrix.from_rows([[0, 1], [1, 0]])


def test_hnf_example():
    A = IntMatrix.from_rows([[2, 4], [6, 8]])

    H, U = hnf(A)

    assert H == IntMatrix.from_rows([[2, 0], [0, 4]])
    assert U @ A == H
    assert abs(U.determinant()) == 1


def test_hnf_one_by_one():
    H, U = hnf(IntMatrix.from_rows([[3]]))

    assert H == IntMatrix.from_rows([[3]])
    assert U == IntMatrix.identity(1)


def test_hnf_negative_pivot_and_zero_rows():
    A = IntMatrix.from_rows([[-2, 3], [4, -6], [0, 0]])

    H, U = hnf(A)

    assert H == IntMatrix.from_rows([[2, -3], [0, 0], [0, 0]])
    assert U @ A == H


def test_hnf_reduces_above_pivot():
    A = IntMatrix.from_rows([[1, 5], [0, 3]])

    H, U = hnf(A)

    assert H == IntMatrix.from_rows([[1, 2], [0, 3]])
    assert U @ A == H
