"""Finite groups given by multiplication tables, and their subgroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidInput


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Group on 0..n-1 with ``mult_table[a][b] = a*b`` and identity 0.

    The table is validated on construction (closure, identity, inverses,
    associativity); equality is equality of tables.
    """

    mult_table: tuple[tuple[int, ...], ...]
    inverse_table: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        t = tuple(tuple(int(x) for x in row) for row in self.mult_table)
        object.__setattr__(self, "mult_table", t)
        n = len(t)
        if n < 1:
            raise InvalidInput("group must have at least one element")
        for a, row in enumerate(t):
            if len(row) != n:
                raise InvalidInput(f"mult_table row {a} has length {len(row)}, expected {n}")
            if sorted(row) != list(range(n)):
                raise InvalidInput(f"mult_table row {a} is not a permutation of 0..{n - 1}")
        if any(t[0][a] != a or t[a][0] != a for a in range(n)):
            raise InvalidInput("element 0 is not the identity")
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidInput(f"mult_table is not associative at ({a}, {b}, {c})")
        inv = tuple(t[a].index(0) for a in range(n))
        object.__setattr__(self, "inverse_table", inv)

    @property
    def order(self) -> int:
        return len(self.mult_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mult_table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.mul(self.mul(g, h), self.inv(g))

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        x = 0
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.mult_table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)

    def conjugacy_classes(self) -> list[list[int]]:
        seen, classes = set(), []
        for a in self.elements:
            if a not in seen:
                cls = sorted({self.conj(g, a) for g in self.elements})
                seen.update(cls)
                classes.append(cls)
        return classes

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mult_table == other.mult_table

    def __hash__(self):
        return hash(self.mult_table)


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", els)
        g = self.parent
        if not els or els[0] != 0:
            raise InvalidInput("subgroup must contain the identity 0")
        if els[-1] >= g.order:
            raise InvalidInput(f"element {els[-1]} is not in the group")
        s = set(els)
        for a in els:
            if g.inv(a) not in s:
                raise InvalidInput(f"subgroup not closed under inverses ({a})")
            for b in els:
                if g.mul(a, b) not in s:
                    raise InvalidInput(f"subgroup not closed: {a}*{b} = {g.mul(a, b)}")

    @classmethod
    def generated(cls, parent: FiniteGroup, gens: Iterable[int]) -> Subgroup:
        els = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = parent.mul(x, s)
                if y not in els:
                    els.add(y)
                    frontier.append(y)
        return cls(parent, tuple(els))

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> Subgroup:
        return cls(parent, (0,))

    @classmethod
    def whole(cls, parent: FiniteGroup) -> Subgroup:
        return cls(parent, tuple(parent.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements

    def index_of(self, g: int) -> int:
        """Position of g in the induced group (see :meth:`as_group`)."""
        return self.elements.index(g)

    def is_normal(self) -> bool:
        s = set(self.elements)
        return all(self.parent.conj(g, h) in s for g in self.parent.elements for h in self.elements)

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily."""
        gens, span = [], {0}
        for h in self.elements:
            if h not in span:
                gens.append(h)
                span = set(Subgroup.generated(self.parent, gens).elements)
        return gens

    def as_group(self) -> FiniteGroup:
        """The subgroup as a group in its own right, element i = elements[i]."""
        pos = {e: i for i, e in enumerate(self.elements)}
        return FiniteGroup(tuple(tuple(pos[self.parent.mul(a, b)] for b in self.elements)
                                 for a in self.elements))

    def coset_of(self, g: int) -> frozenset[int]:
        return frozenset(self.parent.mul(g, h) for h in self.elements)

    def quotient_is_cyclic_generated_by(self, f: int) -> bool:
        """Whether the coset of f generates G/H (H assumed normal)."""
        g = self.parent
        cosets = {self.coset_of(a) for a in g.elements}
        seen, x = set(), 0
        while True:
            c = self.coset_of(x)
            if c in seen:
                break
            seen.add(c)
            x = g.mul(x, f)
        return len(seen) == len(cosets)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent == other.parent and \
            self.elements == other.elements

    def __hash__(self):
        return hash((self.parent, self.elements))


# ---------------------------------------------------------------------------
# constructors


def from_permutations(gens: Sequence[Sequence[int]]) -> FiniteGroup:
    """Group generated by permutations (tuples of images), elements ordered by
    discovery with the identity first. Composition is (p*q)(x) = p(q(x))."""
    k = len(gens[0]) if gens else 1
    ident = tuple(range(k))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        for s in gens:
            y = tuple(s[x] for x in elems[i])
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    table = [[index[tuple(p[x] for x in q)] for q in elems] for p in elems]
    return FiniteGroup(tuple(map(tuple, table)))


def cyclic(n: int) -> FiniteGroup:
    """Z/n with element k standing for sigma^k; 1 is the designated generator."""
    if n < 1:
        raise InvalidInput("cyclic group order must be >= 1")
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Element (a, b) has index a * |g2| + b."""
    n2 = g2.order
    els = [(a, b) for a in g1.elements for b in g2.elements]
    return FiniteGroup(tuple(tuple(g1.mul(a, c) * n2 + g2.mul(b, d) for c, d in els)
                             for a, b in els))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    if n < 3:
        raise InvalidInput("dihedral(n) needs n >= 3 here; use products of cyclic groups")
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    return from_permutations([r, s])


def quaternion() -> FiniteGroup:
    """Q8 as the regular permutation action on itself."""
    # elements 1,-1,i,-i,j,-j,k,-k encoded as 0..7
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    unit = {("1", x): x for x in "1ijk"}
    unit.update({(x, "1"): x for x in "ijk"})
    unit.update({("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
                 ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
                 ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"})

    def mul(a, b):
        sa, ua = (a[0] == "-"), a.lstrip("-")
        sb, ub = (b[0] == "-"), b.lstrip("-")
        c = unit[(ua, ub)]
        sc, uc = (c[0] == "-"), c.lstrip("-")
        neg = sa ^ sb ^ sc
        return ("-" if neg else "") + uc

    idx = {nm: i for i, nm in enumerate(names)}
    return FiniteGroup(tuple(tuple(idx[mul(a, b)] for b in names) for a in names))


def small_groups(max_order: int = 8) -> list[tuple[str, FiniteGroup]]:
    """One representative of every isomorphism type of order <= max_order (<= 8)."""
    if max_order > 8:
        raise ValueError("small_groups only knows orders up to 8")
    c = cyclic
    groups = [("C1", c(1)), ("C2", c(2)), ("C3", c(3)), ("C4", c(4)),
              ("C2xC2", direct_product(c(2), c(2))), ("C5", c(5)), ("C6", c(6)),
              ("S3", dihedral(3)), ("C7", c(7)), ("C8", c(8)),
              ("C4xC2", direct_product(c(4), c(2))),
              ("C2xC2xC2", direct_product(direct_product(c(2), c(2)), c(2))),
              ("D4", dihedral(4)), ("Q8", quaternion())]
    return [(name, g) for name, g in groups if g.order <= max_order]


def subgroups(g: FiniteGroup) -> list[Subgroup]:
    """All subgroups, found as closures of subsets of generators (n <= ~16)."""
    found = {(0,): Subgroup.trivial(g)}
    frontier = [Subgroup.trivial(g)]
    while frontier:
        h = frontier.pop()
        for x in g.elements:
            if x in h:
                continue
            k = Subgroup.generated(g, list(h.elements) + [x])
            if k.elements not in found:
                found[k.elements] = k
                frontier.append(k)
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    return [h for h in subgroups(g) if h.is_normal()]


def frobenius_candidates(inertia: Subgroup) -> list[int]:
    """Elements whose coset generates the (cyclic) quotient by ``inertia``."""
    return [f for f in inertia.parent.elements if inertia.quotient_is_cyclic_generated_by(f)]
