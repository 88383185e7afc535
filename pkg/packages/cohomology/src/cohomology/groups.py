import logging
from functools import cache

from glattice import GLattice
from linalg import (
    TRIVIAL_GROUP,
    FiniteAbelianGroup,
    IntMatrix,
    cokernel,
    hstack,
    kernel_basis,
    solve_exact_columns,
    vstack,
)

logger = logging.getLogger(__name__)


class InternalInconsistency(ValueError):
    pass


def _cocycle_conditions(M: GLattice) -> IntMatrix:
    """
    Rows express `f(gs) - f(g) - g.f(s) = 0` for every element `g` and generator `s`.

    Unknowns are `f(g)` for `g != 1`, block `g - 1` of length `M.rank`; `f(1) = 0`.
    Imposing the condition against generators only gives the same solutions as
    imposing it for all pairs, by induction on word length.
    """
    group, n = M.group, M.rank
    width = (group.order - 1) * n
    conditions: list[list[int]] = []
    for g in range(group.order):
        A = M.act(g)
        for s in group.generator_indices:
            gs = group.mul(g, s)
            for i in range(n):
                row = [0] * width
                if gs:
                    row[(gs - 1) * n + i] += 1
                if g:
                    row[(g - 1) * n + i] -= 1
                for k in range(n):
                    row[(s - 1) * n + k] -= A[i, k]
                conditions.append(row)
    return IntMatrix.from_rows(conditions, cols=width)


def _quotient(cycles: IntMatrix, boundaries: IntMatrix, what: str) -> FiniteAbelianGroup:
    """`span(cycles) / span(boundaries)`, with the boundaries rewritten in cycle coordinates."""
    coordinates = solve_exact_columns(cycles, boundaries)
    if coordinates is None:
        raise InternalInconsistency(f"a {what} coboundary does not lie in the cycle lattice")
    quotient = cokernel(coordinates, cycles.cols)
    if not quotient.is_finite:
        raise InternalInconsistency(f"{what} has free rank {quotient.free_rank}")
    return quotient


@cache
def h1(M: GLattice) -> FiniteAbelianGroup:
    """`H^1(G, M)`: crossed homomorphisms modulo principal ones."""
    group, n = M.group, M.rank
    if group.order == 1 or n == 0:
        return TRIVIAL_GROUP

    cycles = kernel_basis(_cocycle_conditions(M))
    identity = IntMatrix.identity(n)
    boundaries = vstack([M.act(g) - identity for g in range(1, group.order)], cols=n)
    result = _quotient(cycles, boundaries, "H^1")

    logger.debug("H^1 of a rank %d lattice over a group of order %d is %s", n, group.order, result)
    return result


@cache
def tate_minus1(M: GLattice) -> FiniteAbelianGroup:
    """`H^-1(G, M)`: the kernel of the norm map modulo the augmentation submodule."""
    group, n = M.group, M.rank
    if group.order == 1 or n == 0:
        return TRIVIAL_GROUP

    norm = IntMatrix.zero(n, n)
    for g in range(group.order):
        norm = norm + M.act(g)
    cycles = kernel_basis(norm)
    if cycles.cols == 0:
        return TRIVIAL_GROUP

    identity = IntMatrix.identity(n)
    boundaries = hstack([M.act(g) - identity for g in range(group.order)], rows=n)
    result = _quotient(cycles, boundaries, "H^-1")

    logger.debug("H^-1 of a rank %d lattice over a group of order %d is %s", n, group.order, result)
    return result
