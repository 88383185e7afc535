from collections.abc import Sequence

from .abelian import FiniteAbelianGroup
from .matrix import IntMatrix, ShapeError, Vector
from .normal_forms import hnf, snf


def _nonzero_rows(H: IntMatrix) -> int:
    return sum(1 for i in range(H.rows) if any(H.row(i)))


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """
    Columns form a saturated, HNF-canonical Z-basis of `{x : A x = 0}`.

    The rows of `U` in `U A^T = H` that meet the zero rows of `H` span the left
    kernel of `A^T`; a unimodular `U` makes that span saturated.
    """
    H, U = hnf(A.transpose())
    r = _nonzero_rows(H)
    if r == A.cols:
        return IntMatrix.zero(A.cols, 0)
    K, _ = hnf(IntMatrix.from_rows([U.row(i) for i in range(r, A.cols)], cols=A.cols))
    return K.transpose()


def image_basis(A: IntMatrix) -> IntMatrix:
    """Columns form the HNF-canonical basis of the column span of `A`."""
    H, _ = hnf(A.transpose())
    r = _nonzero_rows(H)
    return IntMatrix.from_rows([H.row(i) for i in range(r)], cols=A.rows).transpose()


def cokernel(image_basis: IntMatrix, ambient_rank: int) -> FiniteAbelianGroup:
    """Invariant factors of `Z^ambient_rank / span(columns of image_basis)`."""
    if image_basis.rows != ambient_rank:
        raise ShapeError(f"image vectors of length {image_basis.rows} do not live in Z^{ambient_rank}")
    return FiniteAbelianGroup.from_diagonal(snf(image_basis).diagonal, ambient_rank)


def is_saturated(A: IntMatrix) -> bool:
    """True when the column span of `A` equals its own saturation in `Z^rows`."""
    return not cokernel(A, A.rows).torsion


def solve_exact_columns(A: IntMatrix, B: IntMatrix) -> IntMatrix | None:
    """
    Integer `X` with `A X = B`, or `None` when some column has no integer solution.

    With `U A^T = H` we have `A U^T = H^T`, a column echelon form; each column of `B`
    is solved against `H^T` by forward substitution (free coordinates set to zero) and
    mapped back through `U^T`, so the choice of solution is deterministic.
    """
    if A.rows != B.rows:
        raise ShapeError(f"cannot solve a system with {A.rows} equations against {B.rows} right-hand rows")

    H, U = hnf(A.transpose())
    r = _nonzero_rows(H)
    pivots = [next(j for j in range(H.cols) if H[i, j]) for i in range(r)]

    solutions: list[Vector] = []
    for b in B.to_columns():
        y = [0] * A.cols
        for i, p in enumerate(pivots):
            residual = b[p] - sum(H[j, p] * y[j] for j in range(i))
            if residual % H[i, p]:
                return None
            y[i] = residual // H[i, p]

        if any(sum(H[j, t] * y[j] for j in range(r)) != b[t] for t in range(A.rows)):
            return None

        solutions.append(tuple(sum(U[i, c] * y[i] for i in range(r)) for c in range(A.cols)))

    return IntMatrix.from_columns(solutions, rows=A.cols)


def solve_exact(A: IntMatrix, b: Sequence[int]) -> Vector | None:
    X = solve_exact_columns(A, IntMatrix.from_columns([tuple(b)], rows=len(b)))
    return None if X is None else X.column(0)


def inverse_unimodular(A: IntMatrix) -> IntMatrix:
    if not A.is_square():
        raise ShapeError(f"a {A.rows}x{A.cols} matrix has no inverse")
    inverse = solve_exact_columns(A, IntMatrix.identity(A.rows))
    if inverse is None:
        raise ValueError(f"matrix {A} is not invertible over the integers")
    return inverse
