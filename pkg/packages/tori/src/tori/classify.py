import logging
from typing import Literal

from cohomology import CohomologyProfile, h1, h1_profile, tate_minus1, tate_minus1_profile
from glattice import (
    GLattice,
    Subgroup,
    check_same_group,
    class_representative,
    class_representatives,
    cosets,
    direct_sum,
    equivariant_homs,
    fixed_sublattice,
    is_equivariant,
    sublattice,
    whole_group,
    zero_lattice,
)
from linalg import IntMatrix, hstack, inverse_unimodular, kernel_basis, solve_exact

from .isomorphism import coefficient_vectors, combine, lattices_isomorphic, signature
from .verdict import (
    DEFAULT_BOUNDS,
    IsomorphismWitness,
    Obstruction,
    PermutationWitness,
    Refutation,
    SearchBounds,
    StableEquivalenceWitness,
    StablePermutationWitness,
    SummandWitness,
    Verdict,
    no,
    permutation_lattice,
    summand_multisets,
    unknown,
    yes,
)

logger = logging.getLogger(__name__)

type Mode = Literal["strict", "paper-literal"]


def _vanishing(
    M: GLattice,
    mode: Mode,
    invariant: Literal["h1", "tate_minus1"],
) -> Obstruction | None:
    match mode:
        case "strict":
            profile: CohomologyProfile = h1_profile(M) if invariant == "h1" else tate_minus1_profile(M)
            nontrivial = profile.nontrivial()
            if not nontrivial:
                return None
            entry = nontrivial[0]
            return Obstruction(invariant=invariant, subgroup=entry.subgroup, found=entry.group, detail="nonzero")
        case "paper-literal":
            value = h1(M) if invariant == "h1" else tate_minus1(M)
            if value.is_trivial:
                return None
            return Obstruction(invariant=invariant, subgroup=whole_group(M.group), found=value, detail="nonzero")
        case _:
            raise TypeError(f"Unhandled mode: {mode}")


def is_flabby(M: GLattice, mode: Mode = "strict") -> bool:
    return _vanishing(M, mode, "tate_minus1") is None


def is_coflabby(M: GLattice, mode: Mode = "strict") -> bool:
    return _vanishing(M, mode, "h1") is None


def flabby_verdict(M: GLattice, mode: Mode = "strict") -> Verdict:
    found = _vanishing(M, mode, "tate_minus1")
    return Verdict(status="Yes") if found is None else no(found)


def coflabby_verdict(M: GLattice, mode: Mode = "strict") -> Verdict:
    found = _vanishing(M, mode, "h1")
    return Verdict(status="Yes") if found is None else no(found)


def _basis_image(M: GLattice, g: int, e: int) -> int:
    A = M.act(g)
    return next(i for i in range(M.rank) if A[i, e])


def _orbit_decomposition(M: GLattice) -> PermutationWitness:
    """
    For a lattice whose action matrices are permutation matrices: each orbit of basis
    vectors with stabiliser `S` is matched with `Z[G/R]`, where `x S x^-1 = R` is the
    class representative, by `g.e -> (g x^-1) R`.
    """
    group = M.group
    representatives = class_representatives(group)
    orbits: list[tuple[Subgroup, int, dict[int, int]]] = []
    seen: set[int] = set()
    for e in range(M.rank):
        if e in seen:
            continue
        reached: dict[int, int] = {}
        for g in range(group.order):
            reached.setdefault(_basis_image(M, g, e), g)
        stabiliser = Subgroup(member_indices=tuple(g for g in range(group.order) if _basis_image(M, g, e) == e))
        R, x = class_representative(group, stabiliser)
        orbits.append((R, x, reached))
        seen |= reached.keys()

    orbits.sort(key=lambda orbit: representatives.index(orbit[0]))

    grid = [[0] * M.rank for _ in range(M.rank)]
    offset = 0
    for R, x, reached in orbits:
        classes = cosets(group, R)
        position = {g: i for i, coset in enumerate(classes) for g in coset}
        x_inv = group.inverse(x)
        for b, g in reached.items():
            grid[offset + position[group.mul(g, x_inv)]][b] = 1
        offset += len(classes)

    return PermutationWitness(
        summands=tuple(R for R, _, _ in orbits),
        matrix=IntMatrix.from_rows(grid, cols=M.rank),
    )


def _limited(bounds: SearchBounds, searched: int) -> SearchBounds:
    return bounds.model_copy(update={"search_limit": max(bounds.search_limit - searched, 0)})


def is_permutation(M: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> Verdict:
    bounds = bounds.resolve(M)
    if all(A.is_permutation_matrix() for A in M.action):
        return yes(_orbit_decomposition(M), bounds)

    refuted: list[tuple[tuple[Subgroup, ...], Obstruction]] = []
    undecided = False
    searched = 0
    for summands in summand_multisets(M.group, M.rank):
        verdict = lattices_isomorphic(M, permutation_lattice(M.group, summands), _limited(bounds, searched))
        searched += verdict.searched
        match verdict:
            case Verdict(status="Yes", certificate=IsomorphismWitness(matrix=X)):
                logger.info("permutation lattice with summands %s", [str(H) for H in summands])
                return yes(PermutationWitness(summands=summands, matrix=X), bounds, searched)
            case Verdict(status="No", certificate=Obstruction() as reason):
                refuted.append((summands, reason))
            case Verdict(status="Unknown"):
                undecided = True
            case _:
                raise TypeError(f"Unhandled verdict: {verdict}")

    if undecided:
        return unknown(bounds, searched)
    return no(Refutation(candidates=tuple(refuted)), bounds, searched)


def _stable_obstruction(M: GLattice) -> Obstruction | None:
    for invariant, profile in (("h1", h1_profile), ("tate_minus1", tate_minus1_profile)):
        for entry in profile(M).nontrivial()[:1]:
            return Obstruction(
                invariant=invariant,
                subgroup=entry.subgroup,
                found=entry.group,
                detail="nonzero here, zero on every permutation lattice",
            )
    return None


def is_stably_permutation(M: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> Verdict:
    """
    Is `M + P ~= Q` for permutation lattices `P`, `Q` with `rank(Q) <= rank_bound`?

    No is only ever answered from a nonzero cohomology group.
    """
    bounds = bounds.resolve(M)
    permutation = is_permutation(M, bounds)
    searched = permutation.searched
    if isinstance(permutation.certificate, PermutationWitness):
        witness = permutation.certificate
        return yes(
            StablePermutationWitness(added=(), target=witness.summands, matrix=witness.matrix),
            bounds,
            searched,
        )

    found = _stable_obstruction(M)
    if found is not None:
        return no(found, bounds, searched)

    assert bounds.rank_bound is not None
    group = M.group
    for extra in range(1, bounds.rank_bound - M.rank + 1):
        for added in summand_multisets(group, extra):
            padded = direct_sum(M, permutation_lattice(group, added))
            for target in summand_multisets(group, M.rank + extra):
                if searched >= bounds.search_limit:
                    return unknown(bounds, searched)
                searched += 1
                Q = permutation_lattice(group, target)
                if signature(padded) != signature(Q):
                    continue
                verdict = lattices_isomorphic(padded, Q, _limited(bounds, searched), with_cohomology=False)
                searched += verdict.searched
                if isinstance(verdict.certificate, IsomorphismWitness):
                    logger.info("stably permutation after adding %d summands", len(added))
                    return yes(
                        StablePermutationWitness(added=added, target=target, matrix=verdict.certificate.matrix),
                        bounds,
                        searched,
                    )

    return unknown(bounds, searched)


def _summand_from_stable(M: GLattice, witness: StablePermutationWitness) -> SummandWitness:
    m = M.rank
    X = witness.matrix
    Y = inverse_unimodular(X)
    columns = X.to_columns()
    return SummandWitness(
        summands=witness.target,
        section=IntMatrix.from_columns(columns[:m], rows=X.rows),
        retraction=IntMatrix.from_rows(Y.to_rows()[:m], cols=Y.cols),
        complement=permutation_lattice(M.group, witness.added),
        inclusion=IntMatrix.from_columns(columns[m:], rows=X.rows),
    )


def _split(M: GLattice, P: GLattice, bounds: SearchBounds) -> tuple[SummandWitness | None, int]:
    sections = equivariant_homs(M, P)
    retractions = equivariant_homs(P, M)
    if not sections or not retractions:
        return None, 0

    target = IntMatrix.identity(M.rank).entries
    searched = 0
    for coefficients in coefficient_vectors(len(sections), bounds.coeff_bound):
        if searched >= bounds.search_limit:
            break
        searched += 1
        s = combine(sections, coefficients)
        system = IntMatrix.from_columns([(p @ s).entries for p in retractions], rows=len(target))
        solution = solve_exact(system, target)
        if solution is None:
            continue
        p = combine(retractions, solution)
        inclusion = kernel_basis(p)
        return (
            SummandWitness(
                summands=(),
                section=s,
                retraction=p,
                complement=sublattice(P, inclusion),
                inclusion=inclusion,
            ),
            searched,
        )
    return None, searched


def is_invertible(M: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> Verdict:
    bounds = bounds.resolve(M)
    permutation = is_permutation(M, bounds)
    searched = permutation.searched
    if isinstance(permutation.certificate, PermutationWitness):
        X = permutation.certificate.matrix
        return yes(
            SummandWitness(
                summands=permutation.certificate.summands,
                section=X,
                retraction=inverse_unimodular(X),
                complement=zero_lattice(M.group),
                inclusion=IntMatrix.zero(M.rank, 0),
            ),
            bounds,
            searched,
        )

    found = _vanishing(M, "strict", "tate_minus1") or _vanishing(M, "strict", "h1")
    if found is not None:
        return no(found, bounds, searched)

    stable = is_stably_permutation(M, _limited(bounds, searched))
    searched += stable.searched
    if isinstance(stable.certificate, StablePermutationWitness):
        return yes(_summand_from_stable(M, stable.certificate), bounds, searched)

    assert bounds.rank_bound is not None
    group = M.group
    representatives = class_representatives(group)
    fixed = [fixed_sublattice(M, H).cols for H in representatives]
    for rank in range(M.rank + 1, bounds.rank_bound + 1):
        for summands in summand_multisets(group, rank):
            if searched >= bounds.search_limit:
                return unknown(bounds, searched)
            P = permutation_lattice(group, summands)
            if any(fixed_sublattice(P, H).cols < f for H, f in zip(representatives, fixed)):
                continue
            witness, tried = _split(M, P, _limited(bounds, searched))
            searched += tried + 1
            if witness is not None:
                logger.info("direct summand of a permutation lattice of rank %d", rank)
                return yes(witness.model_copy(update={"summands": summands}), bounds, searched)

    return unknown(bounds, searched)


def stably_equivalent(M1: GLattice, M2: GLattice, bounds: SearchBounds = DEFAULT_BOUNDS) -> Verdict:
    check_same_group(M1, M2)
    bounds = bounds.resolve(M1 if M1.rank >= M2.rank else M2)

    direct = lattices_isomorphic(M1, M2, bounds)
    searched = direct.searched
    if isinstance(direct.certificate, IsomorphismWitness):
        return yes(
            StableEquivalenceWitness(left_added=(), right_added=(), matrix=direct.certificate.matrix),
            bounds,
            searched,
        )

    for invariant, profile in (("h1", h1_profile), ("tate_minus1", tate_minus1_profile)):
        for left, right in zip(profile(M1).entries, profile(M2).entries):
            if left.group != right.group:
                return no(
                    Obstruction(
                        invariant=invariant,
                        subgroup=left.subgroup,
                        found=left.group,
                        detail=f"{left.group} vs {right.group}",
                    ),
                    bounds,
                    searched,
                )

    assert bounds.rank_bound is not None
    group = M1.group
    for total in range(max(M1.rank, M2.rank), bounds.rank_bound + 1):
        for left_added in summand_multisets(group, total - M1.rank):
            left = direct_sum(M1, permutation_lattice(group, left_added))
            for right_added in summand_multisets(group, total - M2.rank):
                if not left_added and not right_added:
                    continue
                if searched >= bounds.search_limit:
                    return unknown(bounds, searched)
                searched += 1
                right = direct_sum(M2, permutation_lattice(group, right_added))
                if signature(left) != signature(right):
                    continue
                verdict = lattices_isomorphic(left, right, _limited(bounds, searched), with_cohomology=False)
                searched += verdict.searched
                if isinstance(verdict.certificate, IsomorphismWitness):
                    return yes(
                        StableEquivalenceWitness(
                            left_added=left_added,
                            right_added=right_added,
                            matrix=verdict.certificate.matrix,
                        ),
                        bounds,
                        searched,
                    )

    return unknown(bounds, searched)


def _is_isomorphism(M: GLattice, N: GLattice, X: IntMatrix) -> bool:
    return X.shape == (N.rank, M.rank) and X.is_unimodular() and is_equivariant(M, N, X)


def verify_certificate(M: GLattice, verdict: Verdict, N: GLattice | None = None) -> bool:
    if verdict.status != "Yes":
        return True

    group = M.group
    match verdict.certificate:
        case PermutationWitness(summands=summands, matrix=X):
            return _is_isomorphism(M, permutation_lattice(group, summands), X)
        case StablePermutationWitness(added=added, target=target, matrix=X):
            return _is_isomorphism(
                direct_sum(M, permutation_lattice(group, added)),
                permutation_lattice(group, target),
                X,
            )
        case SummandWitness(summands=summands, section=s, retraction=p, complement=C, inclusion=i):
            P = permutation_lattice(group, summands)
            return (
                is_equivariant(M, P, s)
                and is_equivariant(P, M, p)
                and is_equivariant(C, P, i)
                and p @ s == IntMatrix.identity(M.rank)
                and (p @ i).is_zero()
                and hstack([s, i], rows=P.rank).is_unimodular()
            )
        case IsomorphismWitness(matrix=X):
            return N is not None and _is_isomorphism(M, N, X)
        case StableEquivalenceWitness(left_added=left_added, right_added=right_added, matrix=X):
            return N is not None and _is_isomorphism(
                direct_sum(M, permutation_lattice(group, left_added)),
                direct_sum(N, permutation_lattice(group, right_added)),
                X,
            )
        case Obstruction() | Refutation() | None:
            return False
        case _:
            raise TypeError(f"Unhandled certificate: {verdict.certificate}")
