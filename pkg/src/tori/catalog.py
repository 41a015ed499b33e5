"""Standard tori as Galois lattices: split, Weil restriction, norm one."""
from __future__ import annotations

from .errors import NotCyclic
from .groups import FiniteGroup
from .lattice import GaloisLattice, check_valid, direct_sum  # noqa: F401  (re-export)
from .matrix import IntMatrix


def split_torus(group: FiniteGroup, d: int) -> GaloisLattice:
    if d < 0:
        raise ValueError("rank must be >= 0")
    ident = IntMatrix.identity(d)
    return GaloisLattice(group, d, (ident,) * group.order)


def permutation_matrix(perm) -> IntMatrix:
    """Matrix sending e_j to e_perm[j]."""
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = 1
    return IntMatrix(rows, n, n)


def weil_restriction(group: FiniteGroup) -> GaloisLattice:
    """Z[group] with g acting by left translation on the basis {e_h}."""
    return GaloisLattice(group, group.order,
                         tuple(permutation_matrix(group.mult_table[g]) for g in group.elements))


def norm_one_torus(group: FiniteGroup, generator: int = 1) -> GaloisLattice:
    """Z[group] / (norm element) for a cyclic group with designated generator.

    Basis e_1..e_{n-1} = images of 1, s, ..., s^(n-2); s maps e_i to e_{i+1}
    and e_{n-1} to -(e_1 + ... + e_{n-1}).
    """
    n = group.order
    if n == 1:
        return GaloisLattice(group, 0, (IntMatrix.zeros(0, 0),))
    if not 0 <= generator < n or group.element_order(generator) != n:
        raise NotCyclic(f"element {generator} does not generate a cyclic group of order {n}")
    d = n - 1
    rows = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        rows[i + 1][i] = 1
    for i in range(d):
        rows[i][d - 1] = -1
    S = IntMatrix(rows, d, d)
    mats = [None] * n
    x, M = 0, IntMatrix.identity(d)
    for _ in range(n):
        mats[x] = M
        x, M = group.mul(generator, x), S @ M
    return check_valid(GaloisLattice(group, d, tuple(mats)))
