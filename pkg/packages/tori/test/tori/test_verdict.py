from glattice.group import close_group, trivial_subgroup, whole_group
from glattice.lattice import coset_lattice, direct_sum, natural_lattice, trivial_lattice
from linalg.abelian import FiniteAbelianGroup
from linalg.matrix import IntMatrix
from tori.verdict import (
    Obstruction,
    PermutationWitness,
    SearchBounds,
    Verdict,
    no,
    permutation_lattice,
    summand_multisets,
    unknown,
    yes,
)

TRANSPOSITION = IntMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
THREE_CYCLE = IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def cyclic_two():
    return close_group(1, [IntMatrix.from_rows([[-1]])])


def test_search_bounds_resolve_default():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    actual = SearchBounds().resolve(natural_lattice(group))

    assert actual == SearchBounds(rank_bound=15)


def test_search_bounds_resolve_explicit():
    bounds = SearchBounds(rank_bound=4, coeff_bound=1)

    assert bounds.resolve(natural_lattice(cyclic_two())) is bounds


def test_verdict_helpers():
    bounds = SearchBounds(rank_bound=3)
    witness = PermutationWitness(summands=(trivial_subgroup(),), matrix=IntMatrix.identity(2))
    reason = Obstruction(invariant="rank", detail="rank 1 vs 2")

    assert yes(witness, bounds, 4) == Verdict(status="Yes", certificate=witness, bounds=bounds, searched=4)
    assert no(reason).is_no
    assert not unknown(bounds, 7).is_yes
    assert unknown(bounds, 7).certificate is None


def test_verdict_certificate_is_tagged():
    group = cyclic_two()
    verdict = no(
        Obstruction(
            invariant="h1",
            subgroup=whole_group(group),
            found=FiniteAbelianGroup(torsion=(2,)),
            detail="nonzero",
        ),
        SearchBounds(rank_bound=5),
        12,
    )

    actual = Verdict.model_validate_json(verdict.model_dump_json())

    assert actual == verdict
    assert isinstance(actual.certificate, Obstruction)


def test_summand_multisets_cyclic_two():
    group = cyclic_two()

    actual = summand_multisets(group, 2)

    assert actual == ((trivial_subgroup(),), (whole_group(group), whole_group(group)))


def test_summand_multisets_rank_zero():
    assert summand_multisets(cyclic_two(), 0) == ((),)


def test_summand_multisets_symmetric_group():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    actual = summand_multisets(group, 3)

    assert [len(summands) for summands in actual] == [1, 2, 3]
    assert all(sum(group.order // H.order for H in summands) == 3 for summands in actual)


def test_permutation_lattice():
    group = cyclic_two()

    actual = permutation_lattice(group, (trivial_subgroup(), whole_group(group)))

    assert actual == direct_sum(coset_lattice(group, trivial_subgroup()), trivial_lattice(group))


def test_permutation_lattice_empty():
    assert permutation_lattice(cyclic_two(), ()).rank == 0
