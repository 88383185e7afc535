import pytest
from glattice.errors import NotInvertible, OrderCapExceeded
from glattice.group import (
    Subgroup,
    class_representative,
    class_representatives,
    close_group,
    conjugate,
    cosets,
    enumerate_subgroups,
    generating_set,
    subgroup_closure,
    whole_group,
)
from linalg.matrix import IntMatrix, ShapeError

SWAP = IntMatrix.from_rows([[0, 1], [1, 0]])
ROTATION = IntMatrix.from_rows([[0, -1], [1, 0]])
TRANSPOSITION = IntMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
THREE_CYCLE = IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def klein_four():
    return close_group(2, [IntMatrix.diagonal([-1, 1]), IntMatrix.diagonal([1, -1])])


def test_close_group_swap():
    group = close_group(2, [SWAP])

    assert group.order == 2
    assert group.elements == (IntMatrix.identity(2), SWAP)
    assert group.generator_indices == (1,)


def test_close_group_negation():
    group = close_group(2, [IntMatrix.identity(2).scale(-1)])

    assert group.order == 2


def test_close_group_rotation_order():
    group = close_group(2, [ROTATION])

    expected = (IntMatrix.identity(2), ROTATION, ROTATION @ ROTATION, ROTATION @ ROTATION @ ROTATION)

    assert group.elements == expected


def test_close_group_tables():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    assert group.order == 6
    for g in range(group.order):
        assert group.mul(g, group.inverse(g)) == 0
        for h in range(group.order):
            assert group.elements[group.mul(g, h)] == group.elements[g] @ group.elements[h]


def test_close_group_no_generators():
    group = close_group(3, [])

    assert group.order == 1
    assert group.generator_indices == ()


def test_close_group_identity_generator():
    group = close_group(2, [IntMatrix.identity(2), SWAP, SWAP])

    assert group.order == 2
    assert group.generator_indices == (1,)


def test_close_group_generator_order_irrelevant():
    assert close_group(3, [TRANSPOSITION, THREE_CYCLE]) == close_group(3, [THREE_CYCLE, TRANSPOSITION])


def test_close_group_unipotent():
    with pytest.raises(OrderCapExceeded):
        close_group(2, [IntMatrix.from_rows([[1, 1], [0, 1]])])


def test_close_group_cap():
    with pytest.raises(OrderCapExceeded):
        close_group(2, [ROTATION], cap=3)

    assert close_group(2, [ROTATION], cap=4).order == 4


def test_close_group_not_invertible():
    with pytest.raises(NotInvertible):
        close_group(2, [IntMatrix.diagonal([2, 1])])


def test_close_group_shape():
    with pytest.raises(ShapeError):
        close_group(3, [SWAP])


def test_subgroup_requires_identity():
    with pytest.raises(ValueError):
        Subgroup(member_indices=(1, 2))


def test_subgroup_requires_sorted():
    with pytest.raises(ValueError):
        Subgroup(member_indices=(0, 2, 1))


def test_subgroup_closure():
    group = close_group(2, [ROTATION])

    assert subgroup_closure(group, [2]) == Subgroup(member_indices=(0, 2))
    assert subgroup_closure(group, [3]) == whole_group(group)


def test_enumerate_subgroups_c2():
    assert len(enumerate_subgroups(close_group(2, [SWAP]))) == 2


def test_enumerate_subgroups_c4():
    actual = enumerate_subgroups(close_group(2, [ROTATION]))

    expected = (
        Subgroup(member_indices=(0,)),
        Subgroup(member_indices=(0, 2)),
        Subgroup(member_indices=(0, 1, 2, 3)),
    )

    assert actual == expected


def test_enumerate_subgroups_v4():
    actual = enumerate_subgroups(klein_four())

    assert len(actual) == 5
    assert [H.order for H in actual] == [1, 2, 2, 2, 4]


def test_enumerate_subgroups_s3():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    actual = enumerate_subgroups(group)

    assert [H.order for H in actual] == [1, 2, 2, 2, 3, 6]


def test_class_representatives_abelian():
    group = klein_four()

    assert class_representatives(group) == enumerate_subgroups(group)


def test_class_representatives_s3():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    actual = class_representatives(group)

    assert [H.order for H in actual] == [1, 2, 3, 6]


def test_class_representative_conjugates():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    for H in enumerate_subgroups(group):
        R, x = class_representative(group, H)
        assert R in class_representatives(group)
        assert conjugate(group, H, x) == R


def test_generating_set():
    group = close_group(3, [TRANSPOSITION, THREE_CYCLE])

    generators = generating_set(group, whole_group(group))

    assert len(generators) == 2
    assert subgroup_closure(group, generators) == whole_group(group)


def test_cosets():
    group = close_group(2, [ROTATION])

    actual = cosets(group, Subgroup(member_indices=(0, 2)))

    expected = ((0, 2), (1, 3))

    assert actual == expected
