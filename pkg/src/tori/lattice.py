"""Finite groups acting on Z^d: invariants, coinvariants, trace, cohomology.

The stored action is always the one on the character lattice; the action on
cocharacters is obtained with :func:`dual_lattice`. Convention: a left action,
``action[g] @ action[h] == action[g*h]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import abelian
from .abelian import FinAbGroup
from .errors import GroupMismatch, InternalError, InvalidInput, NotWellDefined
from .groups import FiniteGroup, Subgroup
from .matrix import IntMatrix


@dataclass(frozen=True)
class GaloisLattice:
    group: FiniteGroup
    rank: int
    action: tuple[IntMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(self.action))
        if self.rank < 0:
            raise InvalidInput("rank must be >= 0")
        if len(self.action) != self.group.order:
            raise InvalidInput(f"expected {self.group.order} action matrices, "
                               f"got {len(self.action)}")
        for g, m in enumerate(self.action):
            if m.shape != (self.rank, self.rank):
                raise InvalidInput(f"action[{g}] has shape {m.shape}, expected "
                                   f"{(self.rank, self.rank)}")

    def __getitem__(self, g: int) -> IntMatrix:
        return self.action[g]


def validate(L: GaloisLattice) -> str | None:
    """None if L is a valid lattice, else a description of the first violation."""
    if not L.action[0].is_identity():
        return "action(0) is not the identity"
    for g, m in enumerate(L.action):
        if abs(m.det()) != 1:
            return f"action({g}) is not unimodular (det {m.det()})"
    G = L.group
    for g in G.elements:
        for h in G.elements:
            if L.action[g] @ L.action[h] != L.action[G.mul(g, h)]:
                return f"not a homomorphism: action({g})·action({h}) != action({G.mul(g, h)})"
    return None


def check_valid(L: GaloisLattice) -> GaloisLattice:
    problem = validate(L)
    if problem:
        raise InvalidInput(problem)
    return L


def _check_subgroup(L: GaloisLattice, H: Subgroup) -> None:
    if H.parent != L.group:
        raise GroupMismatch("subgroup belongs to a different group")


def _stacked_differences(L: GaloisLattice, elems: Sequence[int], vertical: bool) -> IntMatrix:
    ident = IntMatrix.identity(L.rank)
    blocks = [L.action[h] - ident for h in elems]
    if vertical:
        return IntMatrix.vstack(blocks, L.rank)
    return IntMatrix.hstack(blocks, L.rank)


def invariants_lattice(L: GaloisLattice, H: Subgroup) -> IntMatrix:
    """Canonical basis (columns) of the H-fixed vectors."""
    _check_subgroup(L, H)
    return abelian.kernel_lattice(_stacked_differences(L, H.generators(), vertical=True))


@dataclass(frozen=True)
class Coinvariants:
    """Z^d / <(h-1)x> with the Smith data needed to push maps into it.

    In the coordinates y = U x the quotient is the product of Z/moduli[i]
    (modulus 0 meaning Z); coordinates with modulus 1 are dropped.
    """

    structure: FinAbGroup
    relations: IntMatrix
    U: IntMatrix
    U_inv: IntMatrix
    moduli: tuple[int, ...]
    kept: tuple[int, ...]

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        y = self.U.apply(x)
        return tuple(y[i] % self.moduli[i] if self.moduli[i] else y[i] for i in self.kept)

    def induced(self, M: IntMatrix) -> IntMatrix:
        """Matrix of the endomorphism induced by M on the kept coordinates.

        Entries on a Z/m coordinate row are reduced mod m. Raises
        NotWellDefined if M does not preserve the relations.
        """
        R = abelian.image_lattice(self.relations)
        for col in (M @ self.relations).columns():
            if abelian.lattice_coordinates(R, col) is None:
                raise NotWellDefined("map does not preserve the coinvariant relations")
        full = self.U @ M @ self.U_inv
        rows = []
        for i in self.kept:
            m = self.moduli[i]
            rows.append([full[i, j] % m if m else full[i, j] for j in self.kept])
        return IntMatrix(rows, len(self.kept), len(self.kept))


def _inverse_unimodular(U: IntMatrix) -> IntMatrix:
    n = U.nrows
    rows = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(U.rows)]
    # Gauss-Jordan over Z works because every pivot is a unit at the end
    abelian._row_echelon(rows, n)
    for k in range(n):
        if rows[k][k] != 1:
            raise InternalError("matrix is not unimodular")
    for k in reversed(range(n)):
        for i in range(k):
            q = rows[i][k]
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[k])]
    return IntMatrix([r[n:] for r in rows], n, n)


def coinvariants(L: GaloisLattice, H: Subgroup) -> Coinvariants:
    _check_subgroup(L, H)
    R = _stacked_differences(L, H.elements, vertical=False)
    snf = abelian.smith_normal_form(R)
    d = L.rank
    diag = list(snf.diagonal) + [0] * (d - len(snf.diagonal))
    structure = FinAbGroup(sum(1 for x in diag if x == 0), tuple(x for x in diag if x > 1))
    kept = tuple(i for i in range(d) if diag[i] != 1)
    return Coinvariants(structure, R, snf.U, _inverse_unimodular(snf.U), tuple(diag), kept)


def trace_map(L: GaloisLattice, H: Subgroup) -> IntMatrix:
    _check_subgroup(L, H)
    total = IntMatrix.zeros(L.rank, L.rank)
    for h in H.elements:
        total = total + L.action[h]
    return total


def map_on_sublattice(M: IntMatrix, basis: IntMatrix) -> IntMatrix:
    """Matrix of M restricted to the M-stable sublattice with canonical ``basis``."""
    cols = [abelian.lattice_coordinates(basis, c) for c in (M @ basis).columns()]
    if any(c is None for c in cols):
        raise NotWellDefined("sublattice is not stable under the map")
    return IntMatrix.from_columns(cols, basis.ncols)


def sublattice_action(L: GaloisLattice, basis: IntMatrix) -> GaloisLattice:
    """Action of L.group on the sublattice with the given (canonical) basis."""
    return GaloisLattice(L.group, basis.ncols,
                         tuple(map_on_sublattice(m, basis) for m in L.action))


@dataclass(frozen=True)
class CanonicalDecomposition:
    """0 -> Y -> X -> N -> 0 with Y = ker(trace) and N = image(trace).

    ``Y_lattice`` and ``N_lattice`` carry the action of the whole group when
    the subgroup is normal (both are then stable), otherwise of the subgroup.
    """

    Y: IntMatrix
    N: IntMatrix
    Y_lattice: GaloisLattice
    N_lattice: GaloisLattice


def canonical_decomposition(L: GaloisLattice, H: Subgroup) -> CanonicalDecomposition:
    tr = trace_map(L, H)
    Y = abelian.kernel_lattice(tr)
    N = abelian.image_lattice(tr)
    base = L if H.is_normal() else restrict(L, H)
    return CanonicalDecomposition(Y, N, sublattice_action(base, Y), sublattice_action(base, N))


def cocycle_matrix(L: GaloisLattice, H: Subgroup) -> IntMatrix:
    """Linear conditions f(ab) - f(a) - a.f(b) = 0 on f in (Z^d)^H, over all pairs.

    Unknowns are ordered (f(h_0), f(h_1), ...) following H.elements.
    """
    d = L.rank
    els = H.elements
    pos = {h: i for i, h in enumerate(els)}
    G = L.group
    rows = []
    for a in els:
        for b in els:
            ab = G.mul(a, b)
            act = L.action[a]
            for i in range(d):
                row = [0] * (len(els) * d)
                row[pos[ab] * d + i] += 1
                row[pos[a] * d + i] -= 1
                for j in range(d):
                    row[pos[b] * d + j] -= act[i, j]
                if any(row):
                    rows.append(row)
    return IntMatrix(rows, len(rows), len(els) * d)


def coboundary_matrix(L: GaloisLattice, H: Subgroup) -> IntMatrix:
    """x -> (h.x - x)_h as a (|H| d) x d matrix."""
    return _stacked_differences(L, H.elements, vertical=True)


def h1(L: GaloisLattice, H: Subgroup) -> FinAbGroup:
    """H^1(H, L) as cocycles modulo coboundaries, computed over all pairs."""
    _check_subgroup(L, H)
    Z = abelian.kernel_lattice(cocycle_matrix(L, H))
    B = coboundary_matrix(L, H)
    group = abelian.subgroup_structure_in_quotient(B, Z)
    if group.free_rank:
        raise InternalError(f"H^1 of a finite group on a lattice came out infinite: {group}")
    return group


def character(L: GaloisLattice) -> tuple[int, ...]:
    return tuple(m.trace() for m in L.action)


def dual_lattice(L: GaloisLattice) -> GaloisLattice:
    """Contragredient action g -> action(g^-1)^T."""
    G = L.group
    return GaloisLattice(G, L.rank, tuple(L.action[G.inv(g)].T for g in G.elements))


def restrict(L: GaloisLattice, D: Subgroup) -> GaloisLattice:
    """L as a module over D; element i of the result is D.elements[i]."""
    _check_subgroup(L, D)
    return GaloisLattice(D.as_group(), L.rank, tuple(L.action[g] for g in D.elements))


def direct_sum(L1: GaloisLattice, L2: GaloisLattice) -> GaloisLattice:
    if L1.group != L2.group:
        raise GroupMismatch("direct sum of lattices over different groups")
    return GaloisLattice(L1.group, L1.rank + L2.rank,
                         tuple(IntMatrix.block_diagonal([a, b])
                               for a, b in zip(L1.action, L2.action)))


def conjugate(L: GaloisLattice, P: IntMatrix) -> GaloisLattice:
    """The isomorphic lattice g -> P action(g) P^-1 (P unimodular)."""
    P_inv = _inverse_unimodular(P)
    return GaloisLattice(L.group, L.rank, tuple(P @ m @ P_inv for m in L.action))
