from collections.abc import Callable
from functools import cache
from typing import Annotated

from glattice import GLattice, Subgroup, close_group, natural_lattice, whole_group
from linalg import IntMatrix
from pydantic import BaseModel, Field

from .errors import UnknownName
from .rationality import Level

type Identifier = Annotated[str, Field(min_length=1)]


class TorusDescriptor(BaseModel, frozen=True):
    """
    A torus over a base field, through the Galois lattice of its characters.

    `expected_witnesses` are the subgroups at which `H^1` of the flabby quotient is nonzero.
    """

    name: Identifier
    narrative: str
    character_lattice: GLattice
    expected_level: Level
    expected_witnesses: tuple[Subgroup, ...] = ()


def _natural(dim: int, *generators: list[list[int]]) -> GLattice:
    return natural_lattice(close_group(dim, [IntMatrix.from_rows(rows, cols=dim) for rows in generators]))


def _split_1() -> TorusDescriptor:
    return TorusDescriptor(
        name="split_1",
        narrative="The multiplicative group R^x over R: xy = 1. Split, so the Galois group acts trivially on Z.",
        character_lattice=_natural(1),
        expected_level="Rational",
    )


def _split_2() -> TorusDescriptor:
    return TorusDescriptor(
        name="split_2",
        narrative="(R^x)^2 over R, a split torus of dimension 2 with trivial action on Z^2.",
        character_lattice=_natural(2),
        expected_level="Rational",
    )


def _norm_one_c2() -> TorusDescriptor:
    return TorusDescriptor(
        name="norm_one_C2",
        narrative=(
            "The circle x1^2 + x2^2 = 1 over R with (x1, x2)(y1, y2) = (x1 y1 - x2 y2, x1 y2 + x2 y1), "
            "isomorphic to SO(2). Over C it becomes C^x through x1 + i x2, and complex conjugation "
            "inverts that coordinate, so sigma acts on the character lattice Z by -1."
        ),
        character_lattice=_natural(1, [[-1]]),
        expected_level="StablyRational",
    )


def _sign_rank1() -> TorusDescriptor:
    return TorusDescriptor(
        name="sign_rank1",
        narrative="Z with the nontrivial element of C2 acting by -1; the same lattice as norm_one_C2.",
        character_lattice=_natural(1, [[-1]]),
        expected_level="StablyRational",
    )


def _norm_one_c2_squared() -> TorusDescriptor:
    return TorusDescriptor(
        name="norm_one_C2_squared",
        narrative="The product of two circles over R; sigma acts on Z^2 by -1.",
        character_lattice=_natural(2, [[-1, 0], [0, -1]]),
        expected_level="StablyRational",
    )


def _weil_restriction_c2() -> TorusDescriptor:
    return TorusDescriptor(
        name="weil_restriction_C2",
        narrative=(
            "C^x viewed over R: x1 x3 - x2 x4 = 1, x1 x4 + x2 x3 = 0 in affine 4-space, multiplied as pairs of "
            "complex numbers. Over C it is (C^x)^2 via (z, 1/z), (w, 1/w), and complex conjugation swaps the "
            "two factors, so sigma acts on Z^2 by the swap [[0, 1], [1, 0]]."
        ),
        character_lattice=_natural(2, [[0, 1], [1, 0]]),
        expected_level="Rational",
    )


def _norm_one_v4() -> TorusDescriptor:
    lattice = _natural(
        3,
        [[0, 1, -1], [1, 0, -1], [0, 0, -1]],
        [[0, -1, 1], [0, -1, 0], [1, -1, 0]],
    )
    return TorusDescriptor(
        name="norm_one_V4",
        narrative=(
            "The norm-one torus of a biquadratic extension with Galois group V4 = {1, a, b, ab}. Its character "
            "lattice is Z[V4] modulo the norm element, written in the basis of the images of 1, a and b."
        ),
        character_lattice=lattice,
        expected_level="NotStablyRational",
        expected_witnesses=(whole_group(lattice.group),),
    )


CATALOG: dict[str, Callable[[], TorusDescriptor]] = {
    "split_1": _split_1,
    "split_2": _split_2,
    "norm_one_C2": _norm_one_c2,
    "sign_rank1": _sign_rank1,
    "norm_one_C2_squared": _norm_one_c2_squared,
    "weil_restriction_C2": _weil_restriction_c2,
    "norm_one_V4": _norm_one_v4,
}


def catalog_names() -> tuple[str, ...]:
    return tuple(CATALOG)


@cache
def catalog_get(name: str) -> TorusDescriptor:
    if name not in CATALOG:
        raise UnknownName(f"no catalog entry named {name!r}; known: {', '.join(CATALOG)}")
    return CATALOG[name]()
