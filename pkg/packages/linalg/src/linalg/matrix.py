from collections.abc import Iterable, Sequence
from itertools import chain
from typing import Annotated, Self

from pydantic import BaseModel, Field, model_validator
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

type Nat = Annotated[int, Field(ge=0)]

type Vector = tuple[int, ...]


class ShapeError(ValueError):
    pass


class IntMatrix(BaseModel, frozen=True):
    """
    Dense integer matrix stored row-major.

    Entries are Python integers, so every operation is exact. Shapes with zero rows
    or zero columns are legal and behave as rank-0 objects.
    """

    rows: Nat
    cols: Nat
    entries: tuple[int, ...]

    @model_validator(mode="after")
    def _check_entries(self) -> Self:
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(f"expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            raise ShapeError("ragged rows")
        return cls(rows=len(rows), cols=width, entries=tuple(chain.from_iterable(rows)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        height = len(columns[0]) if columns else (rows or 0)
        if any(len(column) != height for column in columns):
            raise ShapeError("ragged columns")
        return cls(
            rows=height,
            cols=len(columns),
            entries=tuple(columns[j][i] for i in range(height) for j in range(len(columns))),
        )

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(rows=n, cols=n, entries=tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows=rows, cols=cols, entries=(0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        m = len(values) if rows is None else rows
        n = len(values) if cols is None else cols
        grid = [[0] * n for _ in range(m)]
        for i, value in enumerate(values):
            grid[i][i] = value
        return cls.from_rows(grid, cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_columns([self.row(i) for i in range(self.rows)], rows=self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = other.to_columns()
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), column)) for column in columns] for i in range(self.rows)],
            cols=other.cols,
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(
            rows=self.rows,
            cols=self.cols,
            entries=tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(rows=self.rows, cols=self.cols, entries=tuple(k * a for a in self.entries))

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.cols:
            raise ShapeError(f"cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(vector)}")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_permutation_matrix(self) -> bool:
        if not self.is_square() or any(a not in (0, 1) for a in self.entries):
            return False
        return all(sum(self.row(i)) == 1 for i in range(self.rows)) and all(
            sum(self.column(j)) == 1 for j in range(self.cols)
        )

    def determinant(self) -> int:
        if not self.is_square():
            raise ShapeError(f"determinant of a non-square {self.rows}x{self.cols} matrix")
        if self.rows == 0:
            return 1
        return int(_domain_matrix(self).det())

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return _domain_matrix(self).rank()

    def is_unimodular(self) -> bool:
        return self.is_square() and abs(self.determinant()) == 1

    def __str__(self) -> str:
        return str(self.to_rows())


def _domain_matrix(matrix: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(a) for a in matrix.row(i)] for i in range(matrix.rows)], matrix.shape, ZZ)


def hstack(blocks: Iterable[IntMatrix], rows: int) -> IntMatrix:
    columns: list[Vector] = []
    for block in blocks:
        if block.rows != rows:
            raise ShapeError(f"cannot place a block with {block.rows} rows beside {rows} rows")
        columns.extend(block.to_columns())
    return IntMatrix.from_columns(columns, rows=rows)


def vstack(blocks: Iterable[IntMatrix], cols: int) -> IntMatrix:
    grid: list[list[int]] = []
    for block in blocks:
        if block.cols != cols:
            raise ShapeError(f"cannot stack a block with {block.cols} columns under {cols} columns")
        grid.extend(block.to_rows())
    return IntMatrix.from_rows(grid, cols=cols)


def block_diagonal(blocks: Sequence[IntMatrix]) -> IntMatrix:
    rows = sum(block.rows for block in blocks)
    cols = sum(block.cols for block in blocks)
    grid = [[0] * cols for _ in range(rows)]
    r = c = 0
    for block in blocks:
        for i in range(block.rows):
            grid[r + i][c : c + block.cols] = block.row(i)
        r += block.rows
        c += block.cols
    return IntMatrix.from_rows(grid, cols=cols)
