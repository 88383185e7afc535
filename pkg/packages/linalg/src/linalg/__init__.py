from .abelian import TRIVIAL_GROUP, FiniteAbelianGroup
from .lattice_ops import (
    cokernel,
    image_basis,
    inverse_unimodular,
    is_saturated,
    kernel_basis,
    solve_exact,
    solve_exact_columns,
)
from .matrix import IntMatrix, ShapeError, Vector, block_diagonal, hstack, vstack
from .normal_forms import SmithForm, hnf, snf

__all__ = [
    "TRIVIAL_GROUP",
    "FiniteAbelianGroup",
    "IntMatrix",
    "ShapeError",
    "SmithForm",
    "Vector",
    "block_diagonal",
    "cokernel",
    "hnf",
    "hstack",
    "image_basis",
    "inverse_unimodular",
    "is_saturated",
    "kernel_basis",
    "snf",
    "solve_exact",
    "solve_exact_columns",
    "vstack",
]
