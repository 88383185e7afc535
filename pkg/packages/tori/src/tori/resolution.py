import logging
from functools import cache
from typing import Annotated

from cohomology import CohomologyProfile, h1_profile
from glattice import (
    GLattice,
    Subgroup,
    class_representatives,
    coset_lattice,
    cosets,
    direct_sum_all,
    dual,
    fixed_sublattice,
    is_equivariant,
    sublattice,
)
from linalg import IntMatrix, cokernel, image_basis, is_saturated, kernel_basis
from pydantic import BaseModel, Field

from .classify import is_flabby, is_invertible, is_stably_permutation
from .verdict import DEFAULT_BOUNDS, SearchBounds, Verdict, permutation_lattice

logger = logging.getLogger(__name__)

type Multiplicity = Annotated[int, Field(ge=1)]


class Resolution(BaseModel, frozen=True):
    """
    `0 -> source -> middle -> quotient -> 0` with `middle` a permutation lattice.

    `middle_description` lists `(H, multiplicity)` in class-representative order; the
    middle lattice is the sum of `Z[G/H]` in that order.
    """

    source: GLattice
    middle_description: tuple[tuple[Subgroup, Multiplicity], ...]
    middle: GLattice
    quotient: GLattice
    embedding: IntMatrix
    projection: IntMatrix

    def middle_summands(self) -> tuple[Subgroup, ...]:
        return tuple(H for H, count in self.middle_description for _ in range(count))


@cache
def flabby_resolution(M: GLattice) -> Resolution:
    """
    Dualises a cover of `M°` by permutation lattices.

    Every vector `x` of the HNF basis of `(M°)^H`, for each class representative `H`,
    contributes a summand `Z[G/H]` mapped onto `M°` by `gH -> g.x`. The kernel `K` of
    that cover is coflabby, so dualising `0 -> K -> Q -> M° -> 0` gives
    `0 -> M -> Q° -> K° -> 0` with `K°` flabby.
    """
    group = M.group
    D = dual(M)

    description: list[tuple[Subgroup, int]] = []
    summands: list[GLattice] = []
    columns: list[tuple[int, ...]] = []
    for H in class_representatives(group):
        generators = fixed_sublattice(D, H).to_columns()
        if not generators:
            continue
        description.append((H, len(generators)))
        classes = cosets(group, H)
        for x in generators:
            summands.append(coset_lattice(group, H))
            columns.extend(D.act(coset[0]).apply(x) for coset in classes)

    Q = direct_sum_all(group, summands)
    cover = IntMatrix.from_columns(columns, rows=D.rank)
    inclusion = kernel_basis(cover)
    K = sublattice(Q, inclusion)

    resolution = Resolution(
        source=M,
        middle_description=tuple(description),
        middle=dual(Q),
        quotient=dual(K),
        embedding=cover.transpose(),
        projection=inclusion.transpose(),
    )
    logger.info(
        "flabby resolution of a rank %d lattice: middle rank %d, quotient rank %d",
        M.rank,
        Q.rank,
        K.rank,
    )
    return resolution


def verify_resolution(r: Resolution) -> bool:
    M, P, F = r.source, r.middle, r.quotient
    checks = {
        "shapes": (
            r.embedding.shape == (P.rank, M.rank)
            and r.projection.shape == (F.rank, P.rank)
            and P.rank == M.rank + F.rank
            and M.group == P.group == F.group
        ),
    }
    if not checks["shapes"]:
        logger.warning("resolution check failed: shapes")
        return False

    checks |= {
        "middle is the described permutation lattice": P == permutation_lattice(M.group, r.middle_summands()),
        "middle acts by permutation matrices": all(A.is_permutation_matrix() for A in P.action),
        "embedding is equivariant": is_equivariant(M, P, r.embedding),
        "projection is equivariant": is_equivariant(P, F, r.projection),
        "embedding is injective with saturated image": (
            r.embedding.rank() == M.rank and is_saturated(r.embedding)
        ),
        "projection is surjective": cokernel(r.projection, F.rank).is_trivial,
        "image equals kernel": image_basis(r.embedding) == kernel_basis(r.projection),
        "quotient is flabby": is_flabby(F, "strict"),
    }
    for name, passed in checks.items():
        if not passed:
            logger.warning("resolution check failed: %s", name)
            return False
    return True


def flabby_class_trivial(M: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> Verdict:
    return is_stably_permutation(flabby_resolution(M).quotient, bounds)


def flabby_class_obstruction(M: GLattice) -> CohomologyProfile:
    return h1_profile(flabby_resolution(M).quotient)


def flabby_class_invertible(M: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> Verdict:
    return is_invertible(flabby_resolution(M).quotient, bounds)
