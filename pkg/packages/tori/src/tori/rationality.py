import logging
from typing import Annotated, Literal, Self

from cohomology import h1_profile
from glattice import GLattice, Subgroup
from linalg import FiniteAbelianGroup
from pydantic import BaseModel, Field, model_validator

from .classify import is_permutation, is_stably_permutation
from .resolution import Resolution, flabby_resolution, verify_resolution
from .verdict import DEFAULT_BOUNDS, SearchBounds, Verdict

logger = logging.getLogger(__name__)

type Level = Literal["Rational", "StablyRational", "NotStablyRational", "Undetermined"]

type Subject = Literal["character", "flabby"]


class VerdictFact(BaseModel, frozen=True):
    tag: Literal["verdict"] = "verdict"
    question: Literal["permutation", "stably_permutation"]
    subject: Subject
    verdict: Verdict


class ResolutionFact(BaseModel, frozen=True):
    tag: Literal["resolution"] = "resolution"
    middle_description: tuple[tuple[Subgroup, int], ...]
    middle_rank: int
    quotient_rank: int
    verified: bool


class CohomologyFact(BaseModel, frozen=True):
    tag: Literal["cohomology"] = "cohomology"
    degree: Literal["h1", "tate_minus1"]
    subject: Subject
    subgroup: Subgroup
    group: FiniteAbelianGroup


type Fact = Annotated[VerdictFact | ResolutionFact | CohomologyFact, Field(discriminator="tag")]


def _establishes(fact: Fact, level: Level) -> bool:
    match level, fact:
        case "Rational", VerdictFact(question="permutation", subject="character", verdict=verdict):
            return verdict.is_yes
        case "StablyRational", VerdictFact(question="stably_permutation", subject="flabby", verdict=verdict):
            return verdict.is_yes
        case "NotStablyRational", CohomologyFact(degree="h1", subject="flabby", group=group):
            return not group.is_trivial
        case "Undetermined", _:
            return True
        case _:
            return False


class RationalityReport(BaseModel, frozen=True):
    level: Level
    justification: tuple[Fact, ...]

    @model_validator(mode="after")
    def _check_justified(self) -> Self:
        if not any(_establishes(fact, self.level) for fact in self.justification):
            raise ValueError(f"no recorded fact establishes {self.level}")
        return self


def _resolution_fact(r: Resolution) -> ResolutionFact:
    return ResolutionFact(
        middle_description=r.middle_description,
        middle_rank=r.middle.rank,
        quotient_rank=r.quotient.rank,
        verified=verify_resolution(r),
    )


def rationality_verdict(M: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> RationalityReport:
    facts: list[Fact] = []

    permutation = is_permutation(M, bounds)
    facts.append(VerdictFact(question="permutation", subject="character", verdict=permutation))
    if permutation.is_yes:
        return _report("Rational", facts)

    r = flabby_resolution(M)
    facts.append(_resolution_fact(r))

    stable = is_stably_permutation(r.quotient, bounds)
    facts.append(VerdictFact(question="stably_permutation", subject="flabby", verdict=stable))
    if stable.is_yes:
        return _report("StablyRational", facts)

    witnesses = h1_profile(r.quotient).nontrivial()
    facts.extend(
        CohomologyFact(degree="h1", subject="flabby", subgroup=entry.subgroup, group=entry.group)
        for entry in witnesses
    )
    if witnesses:
        return _report("NotStablyRational", facts)

    return _report("Undetermined", facts)


def _report(level: Level, facts: list[Fact]) -> RationalityReport:
    logger.info("rationality level %s from %d facts", level, len(facts))
    return RationalityReport(level=level, justification=tuple(facts))
