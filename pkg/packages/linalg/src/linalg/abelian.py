from collections.abc import Sequence
from math import prod
from typing import Annotated, Self

from pydantic import BaseModel, Field, model_validator

type Nat = Annotated[int, Field(ge=0)]


class FiniteAbelianGroup(BaseModel, frozen=True):
    """`Z^free_rank x Z/d1 x ... x Z/dk` with every `di >= 2` and `di | d(i+1)`."""

    free_rank: Nat = 0
    torsion: tuple[Annotated[int, Field(ge=2)], ...] = ()

    @model_validator(mode="after")
    def _check_chain(self) -> Self:
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"invariant factors {self.torsion} do not form a divisibility chain")
        return self

    @classmethod
    def from_diagonal(cls, diagonal: Sequence[int], ambient_rank: int) -> FiniteAbelianGroup:
        """Quotient `Z^ambient_rank / span(d1 e1, d2 e2, ...)` for a Smith diagonal."""
        nonzero = [abs(d) for d in diagonal if d]
        return cls(
            free_rank=ambient_rank - len(nonzero),
            torsion=tuple(d for d in nonzero if d != 1),
        )

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.torsion) if self.is_finite else None

    def annihilated_by(self, n: int) -> bool:
        return self.is_finite and all(n % d == 0 for d in self.torsion)

    def __str__(self) -> str:
        factors = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            factors.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(factors) or "0"


TRIVIAL_GROUP = FiniteAbelianGroup()
