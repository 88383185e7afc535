from pydantic import BaseModel

from .matrix import IntMatrix

type Grid = list[list[int]]


class SmithForm(BaseModel, frozen=True):
    """`U @ A @ V == D` with `U`, `V` unimodular and `D` diagonal, `d1 | d2 | ...`, all `di >= 0`."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


def _identity(n: int) -> Grid:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _swap_rows(grid: Grid, i: int, j: int) -> None:
    grid[i], grid[j] = grid[j], grid[i]


def _swap_columns(grid: Grid, i: int, j: int) -> None:
    for row in grid:
        row[i], row[j] = row[j], row[i]


def _add_row(grid: Grid, target: int, source: int, k: int) -> None:
    """row[target] += k * row[source]"""
    grid[target] = [a + k * b for a, b in zip(grid[target], grid[source])]


def _add_column(grid: Grid, target: int, source: int, k: int) -> None:
    """column[target] += k * column[source]"""
    for row in grid:
        row[target] += k * row[source]


def _smallest_pivot(grid: Grid, start: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    for i in range(start, len(grid)):
        for j in range(start, len(grid[i])):
            value = abs(grid[i][j])
            if value and (best is None or value < abs(grid[best[0]][best[1]])):
                best = (i, j)
    return best


def snf(A: IntMatrix) -> SmithForm:
    """
    Smith normal form by pivoting on the smallest nonzero entry.

    At step `t` the pivot is the entry of least absolute value in the trailing
    submatrix (ties broken by row-major position). Its row and column are cleared by
    floor-division; any nonzero remainder is smaller than the pivot, so the pivot is
    re-selected. Once both are clear, an entry not divisible by the pivot has its row
    added to the pivot row and the step repeats. Every restart strictly decreases the
    pivot's absolute value, which bounds the loop.
    """
    m, n = A.shape
    D = A.to_rows()
    U = _identity(m)
    V = _identity(n)

    for t in range(min(m, n)):
        while True:
            pivot = _smallest_pivot(D, t)
            if pivot is None:
                break

            i, j = pivot
            if i != t:
                _swap_rows(D, i, t)
                _swap_rows(U, i, t)
            if j != t:
                _swap_columns(D, j, t)
                _swap_columns(V, j, t)

            p = D[t][t]
            clear = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    _add_row(D, i, t, -q)
                    _add_row(U, i, t, -q)
                clear = clear and D[i][t] == 0
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    _add_column(D, j, t, -q)
                    _add_column(V, j, t, -q)
                clear = clear and D[t][j] == 0
            if not clear:
                continue

            stray = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if stray is not None:
                _add_row(D, t, stray, 1)
                _add_row(U, t, stray, 1)
                continue

            if p < 0:
                D[t] = [-a for a in D[t]]
                U[t] = [-a for a in U[t]]
            break

    return SmithForm(
        D=IntMatrix.from_rows(D, cols=n),
        U=IntMatrix.from_rows(U, cols=m),
        V=IntMatrix.from_rows(V, cols=n),
    )


def hnf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """
    Row Hermite normal form: returns `(H, U)` with `U @ A == H` and `U` unimodular.

    `H` is in row echelon form with positive pivots, entries above each pivot reduced
    into `[0, pivot)`, and zero rows at the bottom.
    """
    m, n = A.shape
    H = A.to_rows()
    U = _identity(m)

    row = 0
    for col in range(n):
        if row == m:
            break

        while True:
            candidates = [i for i in range(row, m) if H[i][col]]
            if not candidates:
                break
            best = min(candidates, key=lambda i: (abs(H[i][col]), i))
            if best != row:
                _swap_rows(H, best, row)
                _swap_rows(U, best, row)
            if len(candidates) == 1:
                break
            for i in range(row + 1, m):
                q = H[i][col] // H[row][col]
                if q:
                    _add_row(H, i, row, -q)
                    _add_row(U, i, row, -q)

        if H[row][col] == 0:
            continue

        if H[row][col] < 0:
            H[row] = [-a for a in H[row]]
            U[row] = [-a for a in U[row]]

        for i in range(row):
            q = H[i][col] // H[row][col]
            if q:
                _add_row(H, i, row, -q)
                _add_row(U, i, row, -q)

        row += 1

    return IntMatrix.from_rows(H, cols=n), IntMatrix.from_rows(U, cols=m)
