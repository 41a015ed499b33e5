"""Isogeny of tori as equality of rational characters."""
from __future__ import annotations

from typing import Sequence

from . import lattice
from .errors import GroupMismatch, InvalidInput
from .groups import Subgroup
from .lattice import GaloisLattice


def _check_isomorphism(L1: GaloisLattice, L2: GaloisLattice, iso: Sequence[int]) -> None:
    G1, G2 = L1.group, L2.group
    if G1.order != G2.order or sorted(iso) != list(G2.elements):
        raise GroupMismatch("isomorphism is not a bijection between the groups")
    for a in G1.elements:
        for b in G1.elements:
            if iso[G1.mul(a, b)] != G2.mul(iso[a], iso[b]):
                raise GroupMismatch(f"isomorphism is not multiplicative at ({a}, {b})")


def isogenous(L1: GaloisLattice, L2: GaloisLattice,
              isomorphism: Sequence[int] | None = None) -> bool:
    """True iff the two lattices are rationally equivalent.

    Over characteristic zero a representation of a finite group is determined
    by its character, so this is character equality. Lattices over different
    group tables need ``isomorphism[g1] = g2`` identifying the groups.
    """
    if isomorphism is None:
        if L1.group != L2.group:
            raise GroupMismatch("lattices carry different groups; pass an explicit isomorphism")
        isomorphism = list(L1.group.elements)
    else:
        _check_isomorphism(L1, L2, isomorphism)
    c1, c2 = lattice.character(L1), lattice.character(L2)
    return all(c1[g] == c2[isomorphism[g]] for g in L1.group.elements)


def check_TI_vs_TupperI(L: GaloisLattice, H: Subgroup) -> bool:
    """Compare the good-reduction quotient N = tr(X) with X^H as group modules.

    Both carry actions of the whole group on which H acts trivially; the
    comparison is character equality on every element.
    """
    if not H.is_normal():
        raise InvalidInput("subgroup must be normal")
    dec = lattice.canonical_decomposition(L, H)
    fixed = lattice.sublattice_action(L, lattice.invariants_lattice(L, H))
    return lattice.character(dec.N_lattice) == lattice.character(fixed)
