import json
from typing import Annotated

import pydantic
from glattice import (
    DEFAULT_ORDER_CAP,
    GLattice,
    NotInvertible,
    OrderCapExceeded,
    check_lattice,
    close_group,
    natural_lattice,
)
from linalg import IntMatrix, ShapeError
from pydantic import BaseModel, Field, StrictInt

from .errors import ParseError, ValidationError

type Nat = Annotated[int, Field(ge=0)]

type Identifier = Annotated[str, Field(min_length=1)]


class NamedMatrix(BaseModel, frozen=True):
    name: Identifier
    matrix: tuple[tuple[StrictInt, ...], ...]


class LatticeFile(BaseModel, frozen=True):
    name: str
    rank: Nat
    generators: tuple[NamedMatrix, ...]
    cap: Annotated[int, Field(ge=1)] | None = None

    def check_shapes(self) -> None:
        for i, generator in enumerate(self.generators):
            field = f"generators.{i}.matrix"
            if len(generator.matrix) != self.rank:
                raise ValidationError(field, f"{generator.name} has {len(generator.matrix)} rows, expected {self.rank}")
            for j, row in enumerate(generator.matrix):
                if len(row) != self.rank:
                    raise ValidationError(f"{field}.{j}", f"{generator.name} row has {len(row)} entries")

    def to_lattice(self) -> GLattice:
        self.check_shapes()
        matrices = [IntMatrix.from_rows(generator.matrix, cols=self.rank) for generator in self.generators]
        try:
            group = close_group(self.rank, matrices, cap=self.cap or DEFAULT_ORDER_CAP)
        except NotInvertible as e:
            raise ValidationError("generators", f"non-unimodular generator: {e}") from e
        except OrderCapExceeded as e:
            raise ValidationError("generators", f"group order cap exceeded: {e}") from e
        except ShapeError as e:
            raise ValidationError("generators", str(e)) from e
        M = natural_lattice(group)
        check_lattice(M)
        return M


def read_lattice_file(data: bytes | str) -> LatticeFile:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not UTF-8 at byte {e.start}") from e
    try:
        return LatticeFile.model_validate_json(data)
    except pydantic.ValidationError as e:
        error = e.errors()[0]
        if error["type"] == "json_invalid":
            raise ParseError(error["msg"]) from e
        field = ".".join(map(str, error["loc"])) or "file"
        raise ValidationError(field, error["msg"]) from e


def parse_lattice_file(data: bytes | str) -> GLattice:
    return read_lattice_file(data).to_lattice()


def lattice_to_file(M: GLattice, name: str) -> LatticeFile:
    """
    Writes the images of the group's generators. Re-parsing gives back `M` when `M` is
    the natural lattice of its group, and the lattice of the action's image otherwise.
    """
    return LatticeFile(
        name=name,
        rank=M.rank,
        generators=tuple(
            NamedMatrix(name=f"g{k}", matrix=tuple(tuple(row) for row in M.act(g).to_rows()))
            for k, g in enumerate(M.group.generator_indices, start=1)
        ),
        cap=M.group.order if M.group.order > DEFAULT_ORDER_CAP else None,
    )


def dump_lattice_file(file: LatticeFile) -> str:
    return json.dumps(file.model_dump(mode="json", exclude_none=True), indent=2) + "\n"
