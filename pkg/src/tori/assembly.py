"""Global Shyr invariant as a product of local torsion orders.

Case F (function field over F_q, genus g): the value is
q^(-d(g-1)) * (ln q)^(-r_K) * prod_p |torsion of component group at p|, exact
up to the ln q power which is kept symbolic. Case N (number field): the value
is |disc|^(-d/2) * C_inf * prod_p(...), with the archimedean integral C_inf
never evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lattice
from .errors import InvalidInput, TorusError
from .groups import Subgroup
from .lattice import GaloisLattice
from .local import LocalTorusData, local_shyr_factor


@dataclass(frozen=True)
class PlaceData:
    """A place, in terms of elements of the global group."""

    label: str
    decomposition: Subgroup
    inertia: Subgroup
    frobenius: int
    residue_q: int

    def local_data(self, L: GaloisLattice) -> LocalTorusData:
        D = self.decomposition
        if not set(self.inertia.elements) <= set(D.elements):
            raise InvalidInput("inertia is not contained in the decomposition group")
        if self.frobenius not in D:
            raise InvalidInput(f"frobenius {self.frobenius} is not in the decomposition group")
        local = lattice.restrict(L, D)
        I = Subgroup(local.group, tuple(D.index_of(h) for h in self.inertia.elements))
        return LocalTorusData(local, I, D.index_of(self.frobenius), self.residue_q)


@dataclass(frozen=True)
class GlobalTorusSpec:
    case: str
    lattice: GaloisLattice
    places: tuple[PlaceData, ...] = ()
    constants_q: int | None = None
    genus: int | None = None
    discriminant: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(self.places))
        lattice.check_valid(self.lattice)
        if self.case == "F":
            if self.constants_q is None or self.constants_q < 2:
                raise InvalidInput("case F needs constants_q >= 2")
            if self.genus is None or self.genus < 0:
                raise InvalidInput("case F needs genus >= 0")
        elif self.case == "N":
            if not self.discriminant:
                raise InvalidInput("case N needs a nonzero discriminant")
        else:
            raise InvalidInput(f"case must be 'F' or 'N', not {self.case!r}")
        for p in self.places:
            if p.decomposition.parent != self.lattice.group:
                raise InvalidInput(f"place {p.label}: decomposition group is not a subgroup "
                                   "of the global group")

    @property
    def dimension(self) -> int:
        return self.lattice.rank


@dataclass(frozen=True)
class SymbolicValue:
    """coefficient * (ln q)^lnq_exponent * |disc|^(sqrt_disc_exponent/2) [* C_inf]."""

    coefficient: Fraction
    lnq_exponent: int = 0
    sqrt_disc_exponent: int = 0
    archimedean_unevaluated: bool = False

    def __post_init__(self):
        if self.coefficient == 0:
            raise InvalidInput("coefficient must be nonzero")

    def to_json(self) -> dict:
        c = Fraction(self.coefficient)
        return {
            "coefficient": f"{c.numerator}/{c.denominator}",
            "lnq_exponent": str(self.lnq_exponent),
            "sqrt_disc_exponent": str(self.sqrt_disc_exponent),
            "archimedean_unevaluated": self.archimedean_unevaluated,
        }


def local_factors(spec: GlobalTorusSpec) -> list[tuple[str, int]]:
    out = []
    for p in spec.places:
        try:
            out.append((p.label, local_shyr_factor(p.local_data(spec.lattice))))
        except TorusError as e:
            raise type(e)(f"place {p.label}: {e}") from e
    return out


def finite_part(spec: GlobalTorusSpec) -> int:
    """Product of local Shyr factors over the listed places.

    Unlisted places are taken as unramified and contribute 1.
    """
    total = 1
    for _, f in local_factors(spec):
        total *= f
    return total


def pole_order(spec: GlobalTorusSpec) -> int:
    """Rank of the global invariants of the character lattice (r_K)."""
    G = spec.lattice.group
    return lattice.invariants_lattice(spec.lattice, Subgroup.whole(G)).ncols


def shyr_invariant(spec: GlobalTorusSpec) -> SymbolicValue:
    fin = finite_part(spec)
    d = spec.dimension
    if spec.case == "F":
        q, g = spec.constants_q, spec.genus
        return SymbolicValue(Fraction(q) ** (-d * (g - 1)) * fin, lnq_exponent=-pole_order(spec))
    return SymbolicValue(Fraction(fin), sqrt_disc_exponent=-d, archimedean_unevaluated=True)


def quasi_discriminant(value: SymbolicValue) -> SymbolicValue:
    """1 / c^2, kept symbolic in the same way."""
    return SymbolicValue(1 / Fraction(value.coefficient) ** 2, -2 * value.lnq_exponent,
                         -2 * value.sqrt_disc_exponent, value.archimedean_unevaluated)


def spec_with_places(spec: GlobalTorusSpec, places: Sequence[PlaceData]) -> GlobalTorusSpec:
    return GlobalTorusSpec(spec.case, spec.lattice, tuple(places), spec.constants_q,
                           spec.genus, spec.discriminant)
