from itertools import combinations_with_replacement

import pytest
from cohomology.groups import h1, tate_minus1
from cohomology.profile import h1_profile, tate_minus1_profile
from glattice.group import FiniteMatrixGroup, close_group, enumerate_subgroups, whole_group
from glattice.lattice import GLattice, coset_lattice, direct_sum, dual, natural_lattice, restrict
from linalg.abelian import FiniteAbelianGroup
from linalg.lattice_ops import inverse_unimodular
from linalg.matrix import IntMatrix
from tori.catalog import catalog_get, catalog_names
from tori.classify import (
    is_coflabby,
    is_flabby,
    is_invertible,
    is_permutation,
    is_stably_permutation,
    verify_certificate,
)
from tori.resolution import flabby_class_obstruction, flabby_class_trivial, flabby_resolution, verify_resolution
from tori.verdict import SearchBounds, Verdict

TRANSPOSITION = IntMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
THREE_CYCLE = IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])

GROUPS = {
    "C2": close_group(1, [IntMatrix.from_rows([[-1]])]),
    "C3": close_group(2, [IntMatrix.from_rows([[0, -1], [1, -1]])]),
    "C4": close_group(2, [IntMatrix.from_rows([[0, -1], [1, 0]])]),
    "V4": close_group(2, [IntMatrix.diagonal([-1, 1]), IntMatrix.diagonal([1, -1])]),
    "S3": close_group(3, [TRANSPOSITION, THREE_CYCLE]),
}


def coset_sums(group: FiniteMatrixGroup, max_rank: int = 6) -> list[GLattice]:
    """Every `Z[G/H]` and every sum of two of them, up to `max_rank`."""
    cosets = [coset_lattice(group, H) for H in enumerate_subgroups(group)]
    sums = [direct_sum(P, Q) for P, Q in combinations_with_replacement(cosets, 2) if P.rank + Q.rank <= max_rank]
    return cosets + sums


PERMUTATION = {f"{name}-{k}": P for name, group in GROUPS.items() for k, P in enumerate(coset_sums(group))}

CORPUS = (
    PERMUTATION
    | {name: catalog_get(name).character_lattice for name in catalog_names()}
    | {
        "skewed": natural_lattice(close_group(2, [IntMatrix.from_rows([[1, 2], [0, -1]])])),
        "S3-natural": natural_lattice(GROUPS["S3"]),
        "C3-natural-dual": dual(natural_lattice(close_group(2, [IntMatrix.from_rows([[0, -1], [1, -1]])]))),
    }
)

SMALL = {name: M for name, M in CORPUS.items() if 2 <= M.rank <= 3}

BOUNDS = SearchBounds(search_limit=500)


def changed_basis(M: GLattice) -> GLattice:
    """`M` conjugated by the elementary matrix `I + E_12`."""
    n = M.rank
    U = IntMatrix.from_rows([[int(i == j or (i, j) == (0, 1)) for j in range(n)] for i in range(n)], cols=n)
    V = inverse_unimodular(U)
    return GLattice(rank=n, group=M.group, action=tuple(U @ A @ V for A in M.action))


def agree(left: Verdict, right: Verdict) -> bool:
    return not (left.is_yes and right.is_no) and not (left.is_no and right.is_yes)


def test_changed_basis():
    M = natural_lattice(close_group(2, [IntMatrix.from_rows([[0, 1], [1, 0]])]))

    actual = changed_basis(M)

    assert actual.action[1] == IntMatrix.from_rows([[1, 0], [1, -1]])
    assert actual.character() == M.character()


@pytest.mark.parametrize("name", CORPUS)
def test_duality(name: str):
    M = CORPUS[name]
    for H in enumerate_subgroups(M.group):
        assert tate_minus1(restrict(dual(M), H)) == h1(restrict(M, H))
        assert tate_minus1(restrict(M, H)) == h1(restrict(dual(M), H))


@pytest.mark.parametrize("name", PERMUTATION)
def test_permutation_lattices_have_no_cohomology(name: str):
    P = PERMUTATION[name]
    for H in enumerate_subgroups(P.group):
        assert h1(restrict(P, H)).is_trivial
        assert tate_minus1(restrict(P, H)).is_trivial


@pytest.mark.parametrize("name", CORPUS)
def test_flabby_resolution_verifies(name: str):
    M = CORPUS[name]

    r = flabby_resolution(M)

    assert verify_resolution(r)
    assert r.middle.rank == M.rank + r.quotient.rank
    assert tate_minus1_profile(r.quotient).is_trivial


@pytest.mark.parametrize("name", CORPUS)
def test_implication_chain(name: str):
    M = CORPUS[name]
    permutation = is_permutation(M)
    stable = is_stably_permutation(M)
    invertible = is_invertible(M)

    if permutation.is_yes:
        assert stable.is_yes
    if stable.is_yes:
        assert not invertible.is_no
    if invertible.is_yes:
        assert is_flabby(M) and is_coflabby(M)
    for verdict in (permutation, stable, invertible):
        assert verify_certificate(M, verdict)


@pytest.mark.parametrize("name", SMALL)
def test_verdicts_survive_change_of_basis(name: str):
    M = SMALL[name]
    N = changed_basis(M)

    for classify in (is_permutation, is_stably_permutation, is_invertible):
        left, right = classify(M, BOUNDS), classify(N, BOUNDS)
        assert agree(left, right)
        assert verify_certificate(N, right)
    assert is_flabby(N) == is_flabby(M)
    assert is_coflabby(N) == is_coflabby(M)
    assert h1_profile(N) == h1_profile(M)
    assert tate_minus1_profile(N) == tate_minus1_profile(M)


@pytest.mark.parametrize("name", catalog_names())
def test_flabby_class_survives_change_of_basis(name: str):
    M = catalog_get(name).character_lattice
    N = changed_basis(M)

    assert flabby_class_obstruction(N) == flabby_class_obstruction(M)
    assert agree(flabby_class_trivial(N, BOUNDS), flabby_class_trivial(M, BOUNDS))


def test_flabby_class_survives_change_of_basis_norm_one_klein_four():
    N = changed_basis(catalog_get("norm_one_V4").character_lattice)

    actual = flabby_class_trivial(N)

    assert actual.is_no
    assert actual.certificate.subgroup == whole_group(N.group)


def test_flabby_quotient_norm_one_klein_four_matches_oracle(h1_oracle):
    F = flabby_resolution(catalog_get("norm_one_V4").character_lattice).quotient
    whole = whole_group(F.group)

    for H in enumerate_subgroups(F.group):
        expected = FiniteAbelianGroup(torsion=(2,)) if H == whole else FiniteAbelianGroup()
        assert h1_oracle(restrict(F, H)) == expected
        assert h1(restrict(F, H)) == expected
