from .errors import GroupMismatch, InvalidAction, LatticeError, NotInvertible, OrderCapExceeded
from .group import (
    DEFAULT_ORDER_CAP,
    FiniteMatrixGroup,
    Subgroup,
    class_representative,
    class_representatives,
    close_group,
    conjugate,
    cosets,
    enumerate_subgroups,
    generating_set,
    subgroup_closure,
    trivial_subgroup,
    whole_group,
)
from .homs import equivariant_homs, is_equivariant
from .lattice import (
    GLattice,
    check_lattice,
    check_same_group,
    coset_lattice,
    direct_sum,
    direct_sum_all,
    dual,
    fixed_sublattice,
    natural_lattice,
    restrict,
    sublattice,
    trivial_lattice,
    zero_lattice,
)

__all__ = [
    "DEFAULT_ORDER_CAP",
    "FiniteMatrixGroup",
    "GLattice",
    "GroupMismatch",
    "InvalidAction",
    "LatticeError",
    "NotInvertible",
    "OrderCapExceeded",
    "Subgroup",
    "check_lattice",
    "check_same_group",
    "class_representative",
    "class_representatives",
    "close_group",
    "conjugate",
    "coset_lattice",
    "cosets",
    "direct_sum",
    "direct_sum_all",
    "dual",
    "enumerate_subgroups",
    "equivariant_homs",
    "fixed_sublattice",
    "generating_set",
    "is_equivariant",
    "natural_lattice",
    "restrict",
    "subgroup_closure",
    "sublattice",
    "trivial_lattice",
    "trivial_subgroup",
    "whole_group",
    "zero_lattice",
]
