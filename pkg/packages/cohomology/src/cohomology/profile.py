from collections.abc import Callable
from functools import cache

from glattice import GLattice, Subgroup, class_representatives, restrict
from linalg import FiniteAbelianGroup
from pydantic import BaseModel

from .groups import h1, tate_minus1


class ProfileEntry(BaseModel, frozen=True):
    subgroup: Subgroup
    group: FiniteAbelianGroup


class CohomologyProfile(BaseModel, frozen=True):
    """One cohomology group per conjugacy class of subgroups, in `class_representatives` order."""

    entries: tuple[ProfileEntry, ...]

    @property
    def is_trivial(self) -> bool:
        return all(entry.group.is_trivial for entry in self.entries)

    def nontrivial(self) -> tuple[ProfileEntry, ...]:
        return tuple(entry for entry in self.entries if not entry.group.is_trivial)

    def at(self, H: Subgroup) -> FiniteAbelianGroup:
        for entry in self.entries:
            if entry.subgroup == H:
                return entry.group
        raise KeyError(f"{H} is not a conjugacy-class representative")

    def __str__(self) -> str:
        return ", ".join(f"{entry.subgroup}: {entry.group}" for entry in self.entries)


def _profile(M: GLattice, at: Callable[[GLattice, Subgroup], FiniteAbelianGroup]) -> CohomologyProfile:
    return CohomologyProfile(
        entries=tuple(ProfileEntry(subgroup=H, group=at(M, H)) for H in class_representatives(M.group))
    )


@cache
def h1_profile(M: GLattice) -> CohomologyProfile:
    return _profile(M, h1_at)


@cache
def tate_minus1_profile(M: GLattice) -> CohomologyProfile:
    return _profile(M, tate_minus1_at)


def h1_at(M: GLattice, H: Subgroup) -> FiniteAbelianGroup:
    return h1(restrict(M, H))


def tate_minus1_at(M: GLattice, H: Subgroup) -> FiniteAbelianGroup:
    return tate_minus1(restrict(M, H))
