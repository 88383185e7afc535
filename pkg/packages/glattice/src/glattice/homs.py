from linalg import IntMatrix, kernel_basis

from .lattice import GLattice, check_same_group


def _intertwining_conditions(M: GLattice, N: GLattice) -> IntMatrix:
    n, m = N.rank, M.rank
    conditions: list[list[int]] = []
    for s in M.group.generator_indices:
        A, B = M.act(s), N.act(s)
        for i in range(n):
            for j in range(m):
                row = [0] * (n * m)
                for k in range(n):
                    row[k * m + j] += B[i, k]
                for k in range(m):
                    row[i * m + k] -= A[k, j]
                conditions.append(row)
    return IntMatrix.from_rows(conditions, cols=n * m)


def equivariant_homs(M: GLattice, N: GLattice) -> tuple[IntMatrix, ...]:
    check_same_group(M, N)
    n, m = N.rank, M.rank
    if n * m == 0:
        return ()
    basis = kernel_basis(_intertwining_conditions(M, N))
    return tuple(IntMatrix(rows=n, cols=m, entries=column) for column in basis.to_columns())


def is_equivariant(M: GLattice, N: GLattice, X: IntMatrix) -> bool:
    if X.shape != (N.rank, M.rank):
        return False
    return all(X @ A == B @ X for A, B in zip(M.action, N.action))
