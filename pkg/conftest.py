"""
Brute-force cohomology shared by the package test suites.

Both oracles write out the full presentation over every group element and read the torsion
off sympy's Smith form, so they share no code with `linalg` or `cohomology`.
"""

from collections import defaultdict
from collections.abc import Callable

import pytest
from glattice.lattice import GLattice
from linalg.abelian import FiniteAbelianGroup
from linalg.matrix import IntMatrix
from sympy import ZZ, Matrix, factorint
from sympy.matrices.normalforms import smith_normal_form

type Oracle = Callable[[GLattice], FiniteAbelianGroup]


def invariant_factors(divisors: list[int]) -> tuple[int, ...]:
    """Regroup arbitrary diagonal entries into the invariant factors of the same group."""
    exponents: dict[int, list[int]] = defaultdict(list)
    for d in divisors:
        for p, e in factorint(d).items():
            exponents[p].append(e)
    length = max((len(es) for es in exponents.values()), default=0)
    factors = []
    for i in range(length):
        factor = 1
        for p, es in exponents.items():
            ordered = sorted(es, reverse=True)
            if i < len(ordered):
                factor *= p ** ordered[i]
        factors.append(factor)
    return tuple(reversed(factors))


def torsion_of_cokernel(rows: list[list[int]], width: int) -> FiniteAbelianGroup:
    if not rows or not width:
        return FiniteAbelianGroup()
    D = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(D[i, i])) for i in range(min(D.shape))]
    return FiniteAbelianGroup(torsion=invariant_factors([d for d in diagonal if d > 1]))


def oracle_h1(M: GLattice) -> FiniteAbelianGroup:
    """Torsion of `Z^(|G| n) / image(m -> (g.m - m)_g)`."""
    identity = IntMatrix.identity(M.rank)
    rows = [row for matrix in M.action for row in (matrix - identity).to_rows()]
    return torsion_of_cokernel(rows, M.rank)


def oracle_tate_minus1(M: GLattice) -> FiniteAbelianGroup:
    """Torsion of the coinvariants `M / span(g.m - m)`."""
    identity = IntMatrix.identity(M.rank)
    rows = [sum((list((matrix - identity).row(i)) for matrix in M.action), []) for i in range(M.rank)]
    return torsion_of_cokernel(rows, M.rank * len(M.action))


@pytest.fixture
def h1_oracle() -> Oracle:
    return oracle_h1


@pytest.fixture
def tate_minus1_oracle() -> Oracle:
    return oracle_tate_minus1


@pytest.fixture
def cokernel_torsion() -> Callable[[list[list[int]], int], FiniteAbelianGroup]:
    return torsion_of_cokernel
