import logging
from collections.abc import Iterator, Sequence
from functools import cache
from itertools import product

from cohomology import h1_profile, tate_minus1_profile
from glattice import GLattice, check_same_group, class_representatives, equivariant_homs, fixed_sublattice
from linalg import IntMatrix

from .verdict import DEFAULT_BOUNDS, IsomorphismWitness, Obstruction, SearchBounds, Verdict, no, unknown, yes

logger = logging.getLogger(__name__)


def coefficient_vectors(length: int, bound: int) -> Iterator[tuple[int, ...]]:
    for norm in range(1, bound + 1):
        for vector in product(range(-norm, norm + 1), repeat=length):
            if max(map(abs, vector)) == norm:
                yield vector


def combine(basis: Sequence[IntMatrix], coefficients: Sequence[int]) -> IntMatrix:
    rows, cols = basis[0].shape
    entries = [0] * (rows * cols)
    for c, matrix in zip(coefficients, basis):
        if c:
            for k, a in enumerate(matrix.entries):
                entries[k] += c * a
    return IntMatrix(rows=rows, cols=cols, entries=tuple(entries))


@cache
def signature(M: GLattice) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    fixed = tuple(fixed_sublattice(M, H).cols for H in class_representatives(M.group))
    return M.rank, M.character(), fixed


def obstruction(M: GLattice, N: GLattice, with_cohomology: bool = True) -> Obstruction | None:
    if M.rank != N.rank:
        return Obstruction(invariant="rank", detail=f"rank {M.rank} vs {N.rank}")

    if M.character() != N.character():
        return Obstruction(invariant="character", detail=f"traces {M.character()} vs {N.character()}")

    for H in class_representatives(M.group):
        m, n = fixed_sublattice(M, H).cols, fixed_sublattice(N, H).cols
        if m != n:
            return Obstruction(invariant="fixed_rank", subgroup=H, detail=f"fixed rank {m} vs {n}")

    if with_cohomology:
        for invariant, profile in (("tate_minus1", tate_minus1_profile), ("h1", h1_profile)):
            for left, right in zip(profile(M).entries, profile(N).entries):
                if left.group != right.group:
                    return Obstruction(
                        invariant=invariant,
                        subgroup=left.subgroup,
                        found=left.group,
                        detail=f"{left.group} vs {right.group}",
                    )

    return None


def lattices_isomorphic(
    M: GLattice,
    N: GLattice,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    with_cohomology: bool = True,
) -> Verdict:
    check_same_group(M, N)

    if M == N:
        return yes(IsomorphismWitness(matrix=IntMatrix.identity(M.rank)), bounds)

    found = obstruction(M, N, with_cohomology)
    if found is not None:
        return no(found, bounds)

    homs = equivariant_homs(M, N)
    if not homs:
        return no(Obstruction(invariant="no_homs", detail="no nonzero equivariant homomorphism"), bounds)

    searched = 0
    for coefficients in coefficient_vectors(len(homs), bounds.coeff_bound):
        if searched == bounds.search_limit:
            break
        searched += 1
        X = combine(homs, coefficients)
        if X.is_unimodular():
            logger.debug("isomorphism found after %d candidates with coefficients %s", searched, coefficients)
            return yes(IsomorphismWitness(matrix=X), bounds, searched)

    logger.debug("no isomorphism among %d candidates from %d homomorphisms", searched, len(homs))
    return unknown(bounds, searched)
