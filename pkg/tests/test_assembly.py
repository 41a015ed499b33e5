import random
from fractions import Fraction

import pytest

from tori.assembly import (GlobalTorusSpec, PlaceData, SymbolicValue, finite_part, pole_order,
                           quasi_discriminant, shyr_invariant, spec_with_places)
from tori.catalog import norm_one_torus, split_torus, weil_restriction
from tori.errors import InvalidInput
from tori.groups import (Subgroup, cyclic, direct_product, frobenius_candidates,
                         normal_subgroups, subgroups)
from tori.lattice import character, coinvariants
from tori.sampling import random_lattice

Z = Subgroup


def ramified(G, label="p", q=3):
    return PlaceData(label, Z.whole(G), Z.whole(G), 1 % G.order, q)


def unramified_place(G, label="u", q=7):
    return PlaceData(label, Z.whole(G), Z.trivial(G), 1 % G.order, q)


def test_no_places():
    spec = GlobalTorusSpec("F", norm_one_torus(cyclic(3)), (), 3, 0)
    assert finite_part(spec) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_one_ramified_norm_one_place(n):
    G = cyclic(n)
    spec = GlobalTorusSpec("F", norm_one_torus(G), (ramified(G),), 3, 0)
    assert finite_part(spec) == n
    v = shyr_invariant(spec)
    assert v.coefficient == n * 3 ** (n - 1) and v.lnq_exponent == 0
    assert not v.archimedean_unevaluated


def test_two_places_multiply():
    # Z/6 norm-one torus; inertia of order 2 at one place and 3 at another
    G = cyclic(6)
    L = norm_one_torus(G)
    p = PlaceData("p", Z.whole(G), Z.generated(G, [3]), 1, 5)
    r = PlaceData("r", Z.whole(G), Z.generated(G, [2]), 1, 7)
    spec = GlobalTorusSpec("N", L, (p, r), discriminant=-23)
    assert finite_part(spec) == 6


def test_restriction_to_decomposition_group():
    # decomposition group Z/2 inside Z/4, totally ramified there
    G = cyclic(4)
    D = Z.generated(G, [2])
    p = PlaceData("p", D, D, 2, 3)
    spec = GlobalTorusSpec("F", norm_one_torus(G), (p,), 3, 0)
    # Z[Z/4]/(N) over <sigma^2>: coinvariants Z^2 / (2, 2) = Z + Z/2
    local = p.local_data(spec.lattice)
    assert local.lattice.group.order == 2
    assert character(local.lattice) == (3, -1)
    assert finite_part(spec) == 2


def test_place_errors_carry_label():
    G = cyclic(4)
    bad = PlaceData("v7", Z.whole(G), Z.trivial(G), 2, 3)  # 2 does not generate G
    spec = GlobalTorusSpec("F", split_torus(G, 1), (bad,), 3, 0)
    with pytest.raises(InvalidInput, match="place v7"):
        finite_part(spec)


def test_invariance_under_permutation_and_unramified_places():
    G = cyclic(6)
    L = norm_one_torus(G)
    places = [PlaceData("a", Z.whole(G), Z.generated(G, [3]), 1, 5),
              PlaceData("b", Z.whole(G), Z.whole(G), 1, 2),
              unramified_place(G)]
    spec = GlobalTorusSpec("F", L, tuple(places), 2, 1)
    base = finite_part(spec)
    assert finite_part(spec_with_places(spec, places[::-1])) == base
    assert finite_part(spec_with_places(spec, places[:2])) == base
    assert finite_part(spec_with_places(spec, places + [unramified_place(G, "w", 11)])) == base


@pytest.mark.parametrize("d,expected", [(0, 0), (2, 2)])
def test_pole_order_split(d, expected):
    assert pole_order(GlobalTorusSpec("F", split_torus(cyclic(3), d), (), 3, 1)) == expected


def test_pole_order_examples():
    assert pole_order(GlobalTorusSpec("F", norm_one_torus(cyclic(5)), (), 3, 1)) == 0
    assert pole_order(GlobalTorusSpec("F", weil_restriction(cyclic(5)), (), 3, 1)) == 1


@pytest.mark.parametrize("seed", range(8))
def test_pole_order_matches_coinvariant_rank(seed):
    rng = random.Random(seed)
    G = rng.choice([cyclic(4), cyclic(6), direct_product(cyclic(2), cyclic(2))])
    L = random_lattice(rng, G, 4)
    spec = GlobalTorusSpec("N", L, (), discriminant=5)
    assert pole_order(spec) == coinvariants(L, Z.whole(G)).structure.free_rank


def test_weil_finite_part_is_one():
    G = direct_product(cyclic(2), cyclic(2))
    places = []
    for I in normal_subgroups(G):
        for D in subgroups(G):
            if set(I.elements) <= set(D.elements):
                sub = D.as_group()
                Isub = Subgroup(sub, tuple(D.index_of(h) for h in I.elements))
                for f in frobenius_candidates(Isub):
                    places.append(PlaceData(f"p{len(places)}", D, I, D.elements[f], 3))
    assert len(places) > 5
    spec = GlobalTorusSpec("F", weil_restriction(G), tuple(places), 3, 2)
    assert finite_part(spec) == 1


@pytest.mark.parametrize("d,g,q", [(1, 0, 3), (2, 2, 5), (3, 1, 2)])
def test_split_case_f(d, g, q):
    G = cyclic(2)
    spec = GlobalTorusSpec("F", split_torus(G, d), (unramified_place(G),), q, g)
    v = shyr_invariant(spec)
    assert v.coefficient == Fraction(q) ** (-d * (g - 1))
    assert v.lnq_exponent == -d


def test_genus_one_rank_zero_is_exactly_one():
    G = cyclic(3)
    v = shyr_invariant(GlobalTorusSpec("F", split_torus(G, 0), (), 5, 1))
    assert v == SymbolicValue(Fraction(1))


def test_case_n_symbolic():
    G = cyclic(3)
    spec = GlobalTorusSpec("N", norm_one_torus(G), (ramified(G),), discriminant=-3)
    v = shyr_invariant(spec)
    assert v.archimedean_unevaluated
    assert v.coefficient == 3 and v.sqrt_disc_exponent == -2 and v.lnq_exponent == 0
    assert v.to_json() == {"coefficient": "3/1", "lnq_exponent": "0",
                           "sqrt_disc_exponent": "-2", "archimedean_unevaluated": True}


def test_quasi_discriminant():
    v = SymbolicValue(Fraction(3, 2), lnq_exponent=-1)
    D = quasi_discriminant(v)
    assert D.coefficient == Fraction(4, 9) and D.lnq_exponent == 2


def test_spec_validation():
    L = split_torus(cyclic(2), 1)
    with pytest.raises(InvalidInput):
        GlobalTorusSpec("F", L, (), 1, 0)
    with pytest.raises(InvalidInput):
        GlobalTorusSpec("F", L, (), 3, -1)
    with pytest.raises(InvalidInput):
        GlobalTorusSpec("N", L, (), discriminant=0)
    with pytest.raises(InvalidInput):
        GlobalTorusSpec("X", L, ())
    with pytest.raises(InvalidInput):
        SymbolicValue(Fraction(0))
    with pytest.raises(InvalidInput):
        GlobalTorusSpec("F", L, (ramified(cyclic(3)),), 3, 0)
