from functools import cache
from typing import Annotated, Literal

from glattice import FiniteMatrixGroup, GLattice, Subgroup, class_representatives, coset_lattice, direct_sum_all
from linalg import FiniteAbelianGroup, IntMatrix
from pydantic import BaseModel, Field

type Nat = Annotated[int, Field(ge=0)]

type Status = Literal["Yes", "No", "Unknown"]

type Invariant = Literal["rank", "character", "fixed_rank", "tate_minus1", "h1", "no_homs", "candidates"]


class SearchBounds(BaseModel, frozen=True):
    """`rank_bound=None` stands for `rank(M) + 2 |G|`."""

    rank_bound: Nat | None = None
    coeff_bound: Nat = 3
    search_limit: Nat = 20000

    def resolve(self, M: GLattice) -> SearchBounds:
        if self.rank_bound is not None:
            return self
        return self.model_copy(update={"rank_bound": M.rank + 2 * M.group.order})


DEFAULT_BOUNDS = SearchBounds()


class IsomorphismWitness(BaseModel, frozen=True):
    tag: Literal["isomorphism"] = "isomorphism"
    matrix: IntMatrix


class PermutationWitness(BaseModel, frozen=True):
    tag: Literal["permutation"] = "permutation"
    summands: tuple[Subgroup, ...]
    matrix: IntMatrix


class StablePermutationWitness(BaseModel, frozen=True):
    tag: Literal["stably_permutation"] = "stably_permutation"
    added: tuple[Subgroup, ...]
    target: tuple[Subgroup, ...]
    matrix: IntMatrix


class SummandWitness(BaseModel, frozen=True):
    tag: Literal["summand"] = "summand"
    summands: tuple[Subgroup, ...]
    section: IntMatrix
    # retraction @ section == I; inclusion spans the kernel of retraction
    retraction: IntMatrix
    complement: GLattice
    inclusion: IntMatrix


class StableEquivalenceWitness(BaseModel, frozen=True):
    tag: Literal["stable_equivalence"] = "stable_equivalence"
    left_added: tuple[Subgroup, ...]
    right_added: tuple[Subgroup, ...]
    matrix: IntMatrix


class Obstruction(BaseModel, frozen=True):
    tag: Literal["obstruction"] = "obstruction"
    invariant: Invariant
    subgroup: Subgroup | None = None
    found: FiniteAbelianGroup | None = None
    detail: str


class Refutation(BaseModel, frozen=True):
    tag: Literal["refutation"] = "refutation"
    candidates: tuple[tuple[tuple[Subgroup, ...], Obstruction], ...]


type Certificate = Annotated[
    IsomorphismWitness
    | PermutationWitness
    | StablePermutationWitness
    | SummandWitness
    | StableEquivalenceWitness
    | Obstruction
    | Refutation,
    Field(discriminator="tag"),
]


class Verdict(BaseModel, frozen=True):
    status: Status
    certificate: Certificate | None = None
    bounds: SearchBounds | None = None
    searched: Nat = 0

    @property
    def is_yes(self) -> bool:
        return self.status == "Yes"

    @property
    def is_no(self) -> bool:
        return self.status == "No"


def yes(certificate: Certificate, bounds: SearchBounds | None = None, searched: int = 0) -> Verdict:
    return Verdict(status="Yes", certificate=certificate, bounds=bounds, searched=searched)


def no(certificate: Certificate, bounds: SearchBounds | None = None, searched: int = 0) -> Verdict:
    return Verdict(status="No", certificate=certificate, bounds=bounds, searched=searched)


def unknown(bounds: SearchBounds, searched: int) -> Verdict:
    return Verdict(status="Unknown", bounds=bounds, searched=searched)


@cache
def permutation_lattice(group: FiniteMatrixGroup, summands: tuple[Subgroup, ...]) -> GLattice:
    return direct_sum_all(group, [coset_lattice(group, H) for H in summands])


@cache
def summand_multisets(group: FiniteMatrixGroup, rank: int) -> tuple[tuple[Subgroup, ...], ...]:
    """
    Multisets of conjugacy-class representatives whose indices `[G:H]` add up to `rank`.

    Each multiset is listed in class-representative order; the multisets themselves
    are ordered by number of summands, then by representative positions.
    """
    representatives = class_representatives(group)
    index = [group.order // H.order for H in representatives]

    found: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], start: int, remaining: int) -> None:
        if remaining == 0:
            found.append(prefix)
            return
        for i in range(start, len(representatives)):
            if index[i] <= remaining:
                extend(prefix + (i,), i, remaining - index[i])

    extend((), 0, rank)
    found.sort(key=lambda positions: (len(positions), positions))
    return tuple(tuple(representatives[i] for i in positions) for positions in found)
