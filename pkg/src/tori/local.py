"""Invariants of a torus over a local field, from its Galois lattice.

The local data is the character lattice of the decomposition group together
with the inertia subgroup, a Frobenius element and the residue field size.
Everything here is exact: L-factors are Fractions, groups are FinAbGroups.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from . import abelian, lattice
from .abelian import FinAbGroup
from .errors import CrossCheckFailure, InvalidInput, NotGoodReduction, SingularMatrix
from .groups import Subgroup
from .lattice import Coinvariants, GaloisLattice
from .matrix import IntMatrix

log = logging.getLogger(__name__)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while q % p:
        p += 1
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class LocalTorusData:
    """Character lattice of the local Galois group with inertia, Frobenius and q.

    Validation happens on construction. ``q_is_prime_power`` is a warning flag
    only: every formula is polynomial in q, so any q >= 2 is accepted.
    """

    lattice: GaloisLattice
    inertia: Subgroup
    frobenius: int
    residue_q: int
    q_is_prime_power: bool = field(init=False)

    def __post_init__(self):
        lattice.check_valid(self.lattice)
        G = self.lattice.group
        if self.inertia.parent != G:
            raise InvalidInput("inertia is not a subgroup of the lattice's group")
        if not self.inertia.is_normal():
            raise InvalidInput("inertia subgroup is not normal")
        if not 0 <= self.frobenius < G.order:
            raise InvalidInput(f"frobenius {self.frobenius} is not a group element")
        if not self.inertia.quotient_is_cyclic_generated_by(self.frobenius):
            raise InvalidInput(f"frobenius {self.frobenius} does not generate the quotient "
                               "by inertia (quotient not cyclic, or wrong element)")
        if self.residue_q < 2:
            raise InvalidInput("residue_q must be >= 2")
        ok = is_prime_power(self.residue_q)
        object.__setattr__(self, "q_is_prime_power", ok)
        if not ok:
            log.warning("residue_q = %d is not a prime power", self.residue_q)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def frobenius_matrix(self) -> IntMatrix:
        return self.lattice[self.frobenius]


def check_good_reduction(data: LocalTorusData) -> bool:
    return all(data.lattice[h].is_identity() for h in data.inertia.elements)


def frobenius_on_invariants(data: LocalTorusData) -> IntMatrix:
    """h(F), the Frobenius on the canonical basis of X^I.

    Independent of the Frobenius representative: I fixes X^I pointwise.
    """
    B = lattice.invariants_lattice(data.lattice, data.inertia)
    return lattice.map_on_sublattice(data.frobenius_matrix, B)


def artin_l_factor(data: LocalTorusData, s: int = 1) -> Fraction:
    """det(1 - h(F) q^-s)^-1 as an exact rational."""
    if s < 1:
        raise InvalidInput("s must be a positive integer")
    hF = frobenius_on_invariants(data)
    r = hF.nrows
    qs = data.residue_q ** s
    # det(1 - hF/q^s) = det(q^s - hF) / q^(s r)
    den = (IntMatrix.identity(r).scale(qs) - hF).det()
    if den == 0:
        raise SingularMatrix("1 - h(F)/q^s is singular; the action data is inconsistent")
    return Fraction(qs ** r, den)


def point_count_good_reduction(data: LocalTorusData) -> int:
    """|T(k)| = |det(q - F)| for a torus with good reduction."""
    if not check_good_reduction(data):
        raise NotGoodReduction("inertia acts nontrivially on the character lattice")
    d = data.rank
    return abs((IntMatrix.identity(d).scale(data.residue_q) - data.frobenius_matrix).det())


@dataclass(frozen=True)
class FrobeniusOnCoinvariants:
    """Frobenius acting on the inertia coinvariants of the cocharacter lattice.

    ``matrix`` is the Frobenius on Z^d (cocharacter coordinates), a well
    defined endomorphism of Z^d / ``coinvariants.relations``; ``induced`` is
    the same map in the Smith coordinates of the quotient.
    """

    coinvariants: Coinvariants
    matrix: IntMatrix
    induced: IntMatrix

    @property
    def relations(self) -> IntMatrix:
        return self.coinvariants.relations


def frobenius_on_coinvariants(data: LocalTorusData) -> FrobeniusOnCoinvariants:
    dual = lattice.dual_lattice(data.lattice)
    co = lattice.coinvariants(dual, data.inertia)
    F = dual[data.frobenius]
    return FrobeniusOnCoinvariants(co, F, co.induced(F))


def component_group(data: LocalTorusData) -> FinAbGroup:
    """Structure of ker(1 - F) on the inertia coinvariants of the cocharacters."""
    fc = frobenius_on_coinvariants(data)
    one_minus_F = IntMatrix.identity(data.rank) - fc.matrix
    return abelian.kernel_of_endomorphism_on_quotient(fc.relations, one_minus_F)


def geometric_component_group(data: LocalTorusData) -> FinAbGroup:
    """The inertia coinvariants of the cocharacters (components over the
    separable closure of the residue field, before taking F-fixed points)."""
    return lattice.coinvariants(lattice.dual_lattice(data.lattice), data.inertia).structure


def local_shyr_factor(data: LocalTorusData) -> int:
    return component_group(data).torsion_order


@dataclass(frozen=True)
class LocalReport:
    good_reduction: bool
    l_factor_at_1: Fraction
    component_group: FinAbGroup
    shyr_factor: int
    h1_inertia: FinAbGroup
    geometric_component_group: FinAbGroup
    q_is_prime_power: bool


def local_report(data: LocalTorusData) -> LocalReport:
    """All local invariants, with the torsion / H^1 cross-check.

    The cross-check compares two independent routes: the torsion of the
    coinvariants of the cocharacters, and H^1 of inertia on the characters
    computed from cocycles. They have the same order (Tate duality), so in
    particular one is trivial exactly when the other is.
    """
    good = check_good_reduction(data)
    comp = component_group(data)
    geo = geometric_component_group(data)
    h = lattice.h1(data.lattice, data.inertia)
    if geo.torsion_order != h.torsion_order:
        raise CrossCheckFailure(
            f"torsion of inertia coinvariants ({geo}) and H^1(I, X) ({h}) differ in order")
    if comp.torsion_order > geo.torsion_order or geo.torsion_order % comp.torsion_order:
        raise CrossCheckFailure(f"F-fixed torsion {comp} is not a subgroup of {geo}")
    if good and not comp.is_free:
        raise CrossCheckFailure(f"good reduction but component group {comp} has torsion")
    return LocalReport(
        good_reduction=good,
        l_factor_at_1=artin_l_factor(data, 1),
        component_group=comp,
        shyr_factor=comp.torsion_order,
        h1_inertia=h,
        geometric_component_group=geo,
        q_is_prime_power=data.q_is_prime_power,
    )
