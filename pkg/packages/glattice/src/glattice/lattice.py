from collections.abc import Sequence
from typing import Annotated, Self

from linalg import IntMatrix, block_diagonal, kernel_basis, solve_exact_columns, vstack
from pydantic import BaseModel, Field, model_validator

from .errors import GroupMismatch, InvalidAction, NotInvertible
from .group import FiniteMatrixGroup, Subgroup, close_group, cosets, generating_set

type Nat = Annotated[int, Field(ge=0)]


class GLattice(BaseModel, frozen=True):
    """
    `Z^rank` with a left action of `group` on column vectors: `g . m = action[g] @ m`.

    `action` is indexed like `group.elements`. Construction only checks shapes and the
    identity; `check_lattice` verifies the homomorphism property exhaustively.
    """

    rank: Nat
    group: FiniteMatrixGroup
    action: tuple[IntMatrix, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        if len(self.action) != self.group.order:
            raise InvalidAction(f"{len(self.action)} action matrices for a group of order {self.group.order}")
        if any(matrix.shape != (self.rank, self.rank) for matrix in self.action):
            raise InvalidAction(f"action matrices must be {self.rank}x{self.rank}")
        if self.action and self.action[0] != IntMatrix.identity(self.rank):
            raise InvalidAction("the identity element must act trivially")
        return self

    def act(self, g: int) -> IntMatrix:
        return self.action[g]

    def character(self) -> tuple[int, ...]:
        return tuple(sum(matrix[i, i] for i in range(self.rank)) for matrix in self.action)


def check_lattice(M: GLattice) -> None:
    group = M.group
    for g, matrix in enumerate(M.action):
        if not matrix.is_unimodular():
            raise NotInvertible(f"element {g} acts by {matrix}, which is not unimodular")
    for g in range(group.order):
        for h in range(group.order):
            if M.action[g] @ M.action[h] != M.action[group.mul(g, h)]:
                raise InvalidAction(f"action of {g} * {h} does not match the multiplication table")


def natural_lattice(group: FiniteMatrixGroup) -> GLattice:
    return GLattice(rank=group.dim, group=group, action=group.elements)


def trivial_lattice(group: FiniteMatrixGroup, rank: int = 1) -> GLattice:
    return GLattice(rank=rank, group=group, action=(IntMatrix.identity(rank),) * group.order)


def zero_lattice(group: FiniteMatrixGroup) -> GLattice:
    return trivial_lattice(group, rank=0)


def coset_lattice(group: FiniteMatrixGroup, H: Subgroup) -> GLattice:
    classes = cosets(group, H)
    position = {g: i for i, coset in enumerate(classes) for g in coset}
    n = len(classes)
    action = []
    for g in range(group.order):
        grid = [[0] * n for _ in range(n)]
        for i, coset in enumerate(classes):
            grid[position[group.mul(g, coset[0])]][i] = 1
        action.append(IntMatrix.from_rows(grid, cols=n))
    return GLattice(rank=n, group=group, action=tuple(action))


def check_same_group(M: GLattice, N: GLattice) -> None:
    if M.group is not N.group and M.group != N.group:
        raise GroupMismatch("lattices are acted on by different groups")


def direct_sum(M: GLattice, N: GLattice) -> GLattice:
    check_same_group(M, N)
    return GLattice(
        rank=M.rank + N.rank,
        group=M.group,
        action=tuple(block_diagonal([a, b]) for a, b in zip(M.action, N.action)),
    )


def direct_sum_all(group: FiniteMatrixGroup, lattices: Sequence[GLattice]) -> GLattice:
    total = zero_lattice(group)
    for M in lattices:
        total = direct_sum(total, M)
    return total


def dual(M: GLattice) -> GLattice:
    """`Hom(M, Z)`: `g` acts by the transpose of `action[g^-1]`."""
    return GLattice(
        rank=M.rank,
        group=M.group,
        action=tuple(M.action[M.group.inverse(g)].transpose() for g in range(M.group.order)),
    )


def restrict(M: GLattice, H: Subgroup) -> GLattice:
    parent = M.group
    if H.order == parent.order:
        return M
    subgroup = close_group(
        parent.dim,
        [parent.elements[h] for h in generating_set(parent, H)],
        cap=parent.order,
    )
    return GLattice(
        rank=M.rank,
        group=subgroup,
        action=tuple(M.action[parent.index_of(element)] for element in subgroup.elements),
    )


def sublattice(M: GLattice, basis: IntMatrix) -> GLattice:
    action = []
    for matrix in M.action:
        induced = solve_exact_columns(basis, matrix @ basis)
        if induced is None:
            raise InvalidAction("sublattice is not stable under the group")
        action.append(induced)
    return GLattice(rank=basis.cols, group=M.group, action=tuple(action))


def fixed_sublattice(M: GLattice, H: Subgroup) -> IntMatrix:
    identity = IntMatrix.identity(M.rank)
    conditions = vstack([M.action[h] - identity for h in H.member_indices if h != 0], cols=M.rank)
    return kernel_basis(conditions)
