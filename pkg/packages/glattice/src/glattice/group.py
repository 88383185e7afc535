import logging
from collections.abc import Iterable, Sequence
from functools import cache
from typing import Annotated, Self

from linalg import IntMatrix, ShapeError
from pydantic import BaseModel, Field, model_validator

from .errors import NotInvertible, OrderCapExceeded

logger = logging.getLogger(__name__)

type Nat = Annotated[int, Field(ge=0)]

DEFAULT_ORDER_CAP = 24


class FiniteMatrixGroup(BaseModel, frozen=True):
    """
    A finite subgroup of GL(dim, Z), fully enumerated.

    Element 0 is the identity; the others follow in breadth-first discovery order.
    `mul_table[i][j]` is the index of `elements[i] @ elements[j]`.
    """

    dim: Nat
    generators: tuple[IntMatrix, ...]
    generator_indices: tuple[int, ...]
    elements: tuple[IntMatrix, ...]
    mul_table: tuple[tuple[int, ...], ...]
    inverse_table: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, g: int, h: int) -> int:
        return self.mul_table[g][h]

    def inverse(self, g: int) -> int:
        return self.inverse_table[g]

    def index_of(self, matrix: IntMatrix) -> int:
        return _element_index(self)[matrix.entries]


@cache
def _element_index(group: FiniteMatrixGroup) -> dict[tuple[int, ...], int]:
    return {element.entries: i for i, element in enumerate(group.elements)}


class Subgroup(BaseModel, frozen=True):
    member_indices: tuple[int, ...]

    @model_validator(mode="after")
    def _check_members(self) -> Self:
        if not self.member_indices or self.member_indices[0] != 0:
            raise ValueError("a subgroup contains the identity (index 0)")
        if list(self.member_indices) != sorted(set(self.member_indices)):
            raise ValueError("subgroup members must be sorted and distinct")
        return self

    @property
    def order(self) -> int:
        return len(self.member_indices)

    def __contains__(self, g: int) -> bool:
        return g in self.member_indices

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.member_indices)) + "}"


def close_group(dim: int, generators: Sequence[IntMatrix], cap: int = DEFAULT_ORDER_CAP) -> FiniteMatrixGroup:
    for generator in generators:
        if generator.shape != (dim, dim):
            raise ShapeError(f"generator {generator} is not {dim}x{dim}")
        if abs(generator.determinant()) != 1:
            raise NotInvertible(f"generator {generator} has determinant {generator.determinant()}")

    ordered = sorted(set(generators), key=lambda generator: generator.entries)

    identity = IntMatrix.identity(dim)
    elements = [identity]
    index = {identity.entries: 0}
    frontier = 0
    while frontier < len(elements):
        for generator in ordered:
            product = elements[frontier] @ generator
            if product.entries not in index:
                if len(elements) == cap:
                    raise OrderCapExceeded(f"closure of {len(ordered)} generators exceeds {cap} elements")
                index[product.entries] = len(elements)
                elements.append(product)
        frontier += 1

    mul_table = tuple(tuple(index[(a @ b).entries] for b in elements) for a in elements)
    inverse_table = tuple(row.index(0) for row in mul_table)
    generator_indices = tuple(dict.fromkeys(index[g.entries] for g in ordered if index[g.entries] != 0))

    logger.debug("closed %d generators of degree %d into a group of order %d", len(ordered), dim, len(elements))

    return FiniteMatrixGroup(
        dim=dim,
        generators=tuple(ordered),
        generator_indices=generator_indices,
        elements=tuple(elements),
        mul_table=mul_table,
        inverse_table=inverse_table,
    )


def subgroup_closure(group: FiniteMatrixGroup, indices: Iterable[int]) -> Subgroup:
    members = {0, *indices}
    frontier = list(members)
    while frontier:
        g = frontier.pop()
        for h in list(members):
            for product in (group.mul(g, h), group.mul(h, g)):
                if product not in members:
                    members.add(product)
                    frontier.append(product)
    return Subgroup(member_indices=tuple(sorted(members)))


def whole_group(group: FiniteMatrixGroup) -> Subgroup:
    return Subgroup(member_indices=tuple(range(group.order)))


def trivial_subgroup() -> Subgroup:
    return Subgroup(member_indices=(0,))


@cache
def enumerate_subgroups(group: FiniteMatrixGroup) -> tuple[Subgroup, ...]:
    """
    All subgroups, sorted by `(order, member_indices)`.

    Every subgroup is generated by its cyclic subgroups, so joining cyclic subgroups
    onto known subgroups until nothing new appears finds them all.
    """
    cyclic = {subgroup_closure(group, [g]) for g in range(group.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        joined = {
            subgroup_closure(group, H.member_indices + C.member_indices)
            for H in frontier
            for C in cyclic
        }
        frontier = joined - found
        found |= frontier

    logger.debug("group of order %d has %d subgroups", group.order, len(found))

    return tuple(sorted(found, key=lambda H: (H.order, H.member_indices)))


def conjugate(group: FiniteMatrixGroup, H: Subgroup, g: int) -> Subgroup:
    g_inv = group.inverse(g)
    return Subgroup(member_indices=tuple(sorted(group.mul(group.mul(g, h), g_inv) for h in H.member_indices)))


@cache
def class_representatives(group: FiniteMatrixGroup) -> tuple[Subgroup, ...]:
    representatives: list[Subgroup] = []
    seen: set[Subgroup] = set()
    for H in enumerate_subgroups(group):
        if H not in seen:
            representatives.append(H)
            seen |= {conjugate(group, H, g) for g in range(group.order)}
    return tuple(representatives)


def class_representative(group: FiniteMatrixGroup, H: Subgroup) -> tuple[Subgroup, int]:
    for R in class_representatives(group):
        if R.order != H.order:
            continue
        for x in range(group.order):
            if conjugate(group, H, x) == R:
                return R, x
    raise ValueError(f"{H} is not a subgroup of the given group")


def generating_set(group: FiniteMatrixGroup, H: Subgroup) -> tuple[int, ...]:
    chosen: list[int] = []
    closure = trivial_subgroup()
    for h in H.member_indices:
        if h not in closure:
            chosen.append(h)
            closure = subgroup_closure(group, chosen)
    return tuple(chosen)


def cosets(group: FiniteMatrixGroup, H: Subgroup) -> tuple[tuple[int, ...], ...]:
    found = {tuple(sorted(group.mul(g, h) for h in H.member_indices)) for g in range(group.order)}
    return tuple(sorted(found))
