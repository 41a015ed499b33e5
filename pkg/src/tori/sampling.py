"""Random Galois lattices and local data for property suites.

Lattices are direct sums of small blocks (permutation modules on cosets,
their norm-one quotients, sign twists), truncated to a maximal rank and then
conjugated by a random unimodular matrix so that no coordinate system is
privileged.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import lattice
from .catalog import permutation_matrix
from .groups import FiniteGroup, Subgroup, frobenius_candidates, normal_subgroups, \
    small_groups, subgroups
from .lattice import GaloisLattice
from .local import LocalTorusData
from .matrix import IntMatrix


def coset_permutation_lattice(G: FiniteGroup, H: Subgroup) -> GaloisLattice:
    """Z[G/H] with g permuting left cosets."""
    cosets = []
    for g in G.elements:
        c = H.coset_of(g)
        if c not in cosets:
            cosets.append(c)
    pos = {}
    for i, c in enumerate(cosets):
        for x in c:
            pos[x] = i
    reps = [min(c) for c in cosets]
    mats = tuple(permutation_matrix([pos[G.mul(g, r)] for r in reps]) for g in G.elements)
    return GaloisLattice(G, len(cosets), mats)


def norm_one_quotient(P: GaloisLattice) -> GaloisLattice:
    """Quotient of a permutation lattice by its all-ones vector.

    Basis: images of e_0..e_{k-2}; e_{k-1} = -(e_0 + ... + e_{k-2}).
    """
    k = P.rank
    if k <= 1:
        return GaloisLattice(P.group, 0, (IntMatrix.zeros(0, 0),) * P.group.order)

    def reduce(m: IntMatrix) -> IntMatrix:
        rows = [[m[i, j] - m[k - 1, j] for j in range(k - 1)] for i in range(k - 1)]
        return IntMatrix(rows, k - 1, k - 1)

    return GaloisLattice(P.group, k - 1, tuple(reduce(m) for m in P.action))


def sign_characters(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms G -> {+1, -1}, via subgroups of index <= 2."""
    chars = []
    for H in subgroups(G):
        if 2 * H.order == G.order or H.order == G.order:
            chars.append(tuple(1 if g in H else -1 for g in G.elements))
    return chars


def twist(L: GaloisLattice, chi: tuple[int, ...]) -> GaloisLattice:
    return GaloisLattice(L.group, L.rank, tuple(m.scale(c) for m, c in zip(L.action, chi)))


def random_unimodular(rng: random.Random, d: int, steps: int = 6) -> IntMatrix:
    rows = [[int(i == j) for j in range(d)] for i in range(d)]
    if d < 2:
        if d == 1 and rng.random() < 0.5:
            rows[0][0] = -1
        return IntMatrix(rows, d, d)
    for _ in range(steps):
        i, j = rng.sample(range(d), 2)
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    return IntMatrix(rows, d, d)


def random_blocks(rng: random.Random, G: FiniteGroup, kernel: Subgroup | None = None):
    """Candidate blocks. With ``kernel`` given, only blocks on which it acts trivially."""
    subs = subgroups(G)
    if kernel is not None:
        ks = set(kernel.elements)
        subs = [H for H in subs if ks <= set(H.elements)]
    chars = sign_characters(G)
    if kernel is not None:
        chars = [c for c in chars if all(c[h] == 1 for h in kernel.elements)]
    H = rng.choice(subs)
    P = coset_permutation_lattice(G, H)
    kind = rng.choice(["perm", "norm_one", "sign", "twisted"])
    if kind == "norm_one":
        P = norm_one_quotient(P)
    elif kind == "sign":
        P = twist(_trivial(G), rng.choice(chars))
    elif kind == "twisted":
        P = twist(P, rng.choice(chars))
    if rng.random() < 0.3:
        P = lattice.dual_lattice(P)
    return P


def _trivial(G: FiniteGroup) -> GaloisLattice:
    return GaloisLattice(G, 1, (IntMatrix.identity(1),) * G.order)


def random_lattice(rng: random.Random, G: FiniteGroup, max_rank: int = 4,
                   kernel: Subgroup | None = None) -> GaloisLattice:
    """Random lattice of rank 1..max_rank (kernel acting trivially, if given)."""
    target = rng.randint(1, max_rank)
    L = GaloisLattice(G, 0, (IntMatrix.zeros(0, 0),) * G.order)
    for _ in range(50):
        if L.rank >= target:
            break
        B = random_blocks(rng, G, kernel)
        if 0 < B.rank <= max_rank - L.rank:
            L = lattice.direct_sum(L, B)
    if L.rank == 0:
        L = _trivial(G)
    return lattice.conjugate(L, random_unimodular(rng, L.rank))


@dataclass(frozen=True)
class Instance:
    group_name: str
    data: LocalTorusData


def local_setups(max_group_order: int = 8, max_inertia: int = 8):
    """Every (name, G, I, F) with I normal, G/I cyclic, F a valid Frobenius."""
    out = []
    for name, G in small_groups(max_group_order):
        for I in normal_subgroups(G):
            if I.order > max_inertia:
                continue
            for f in frobenius_candidates(I):
                out.append((name, G, I, f))
    return out


def random_instances(seed: int, count: int, max_rank: int = 4, max_inertia: int = 6,
                     max_group_order: int = 8, unramified: bool = False) -> list[Instance]:
    """Random local data over all small groups, inertia normal with |I| <= max_inertia.

    With ``unramified`` the lattice is built so inertia acts trivially.
    """
    rng = random.Random(seed)
    setups = local_setups(max_group_order, max_inertia)
    out = []
    while len(out) < count:
        name, G, I, f = rng.choice(setups)
        L = random_lattice(rng, G, max_rank, kernel=I if unramified else None)
        q = rng.choice([2, 3, 4, 5, 7, 8, 9])
        out.append(Instance(name, LocalTorusData(L, I, f, q)))
    return out
