import pytest
from hypothesis import given, settings, strategies as st

import oracles
from tori.abelian import (FinAbGroup, cokernel_structure, image_lattice, kernel_lattice,
                          kernel_of_endomorphism_on_quotient, lattice_coordinates, rank,
                          smith_normal_form, subgroup_structure_in_quotient)
from tori.errors import InvalidInput, NotWellDefined
from tori.matrix import IntMatrix

M = IntMatrix


def matrices(max_rows=5, max_cols=5, bound=30):
    return st.integers(0, max_rows).flatmap(lambda m: st.integers(0, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                           min_size=m, max_size=m).map(lambda rows: M(rows, m, n))))


def assert_snf(A, snf):
    U, D, V = snf.U, snf.D, snf.V
    assert U @ A @ V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    diag = snf.diagonal
    for i in range(D.nrows):
        for j in range(D.ncols):
            if i != j:
                assert D[i, j] == 0
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b % a == 0) if a else b == 0


# -- smith_normal_form ------------------------------------------------------

def test_snf_identity():
    snf = smith_normal_form(M.identity(2))
    assert snf.D == M.identity(2) and snf.U == M.identity(2) and snf.V == M.identity(2)


def test_snf_2x2_against_minors():
    # d1 = gcd = 2, d1*d2 = |det| = 8; determinantal-divisor oracle gives [2, 4]
    A = M([[2, 4], [6, 8]])
    assert oracles.invariant_factors_by_minors(A.tolist(), 2) == [2, 4]
    snf = smith_normal_form(A)
    assert snf.diagonal == (2, 4)
    assert_snf(A, snf)


def test_snf_zero_map():
    A = M.zeros(2, 3)
    snf = smith_normal_form(A)
    assert snf.D == A and snf.U == M.identity(2) and snf.V == M.identity(3)


@pytest.mark.parametrize("shape", [(0, 0), (0, 3), (3, 0)])
def test_snf_empty(shape):
    A = M.zeros(*shape)
    assert_snf(A, smith_normal_form(A))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_invariants(A):
    assert_snf(A, smith_normal_form(A))


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4, 12))
def test_snf_diagonal_matches_minors(A):
    expected = oracles.invariant_factors_by_minors(A.tolist(), A.ncols)
    assert list(smith_normal_form(A, track=False).diagonal) == expected


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_snf_deterministic(A):
    assert smith_normal_form(A) == smith_normal_form(A)


# -- cokernel_structure -----------------------------------------------------

def test_cokernel_empty_relations():
    assert cokernel_structure(M.zeros(3, 0)) == FinAbGroup(3, ())


def test_cokernel_diag():
    assert cokernel_structure(M.diagonal([1, 2])) == FinAbGroup(0, (2,))


def test_cokernel_2x2():
    assert cokernel_structure(M([[2, 4], [6, 8]])) == FinAbGroup(0, (2, 4))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_cokernel_torsion_is_det(rows):
    A = M(rows)
    d = oracles.det(rows)
    G = cokernel_structure(A)
    if d:
        assert G.free_rank == 0 and G.torsion_order == abs(d)
    else:
        assert G.free_rank >= 1


# -- kernel_lattice ---------------------------------------------------------

def test_kernel_identity():
    assert kernel_lattice(M.identity(3)).shape == (3, 0)


def test_kernel_single_row():
    K = kernel_lattice(M([[1, 1]]))
    assert K.ncols == 1 and set(K.column(0)) == {1, -1}


def test_kernel_nonsingular():
    assert kernel_lattice(M([[2, 4], [6, 8]])).ncols == 0


@settings(max_examples=120, deadline=None)
@given(matrices())
def test_kernel_properties(A):
    K = kernel_lattice(A)
    assert K.nrows == A.ncols
    assert (A @ K).is_zero()
    assert K.ncols + oracles.rational_rank(A.tolist(), A.ncols) == A.ncols
    # saturated: the kernel lattice has no torsion cokernel inside Z^n
    if K.ncols:
        assert cokernel_structure(K).is_free
    assert kernel_lattice(A) == K


def test_kernel_is_canonical():
    # two different spanning sets of the same lattice give the same basis
    A = M([[1, 1, 1]])
    B = M([[2, 2, 2], [3, 3, 3]])
    assert kernel_lattice(A) == kernel_lattice(B)


def test_lattice_coordinates():
    B = image_lattice(M([[2, 0], [0, 3]]))
    assert lattice_coordinates(B, (4, 9)) is not None
    assert lattice_coordinates(B, (1, 0)) is None


# -- subgroup_structure_in_quotient -----------------------------------------

def test_subgroup_no_relations():
    assert subgroup_structure_in_quotient(M.zeros(2, 0), M.identity(2)) == FinAbGroup(2)


def test_subgroup_mod_two():
    assert subgroup_structure_in_quotient(M([[2]]), M.identity(1)) == FinAbGroup(0, (2,))


def test_subgroup_generator_is_relation():
    assert subgroup_structure_in_quotient(M([[3]]), M([[3]])).is_trivial


def test_subgroup_mismatched_ambient():
    with pytest.raises(InvalidInput):
        subgroup_structure_in_quotient(M.zeros(2, 0), M.identity(3))


# -- kernel_of_endomorphism_on_quotient -------------------------------------

@pytest.mark.parametrize("d", [0, 1, 3])
def test_endo_zero_map(d):
    assert kernel_of_endomorphism_on_quotient(M.zeros(d, 0), M.zeros(d, d)) == FinAbGroup(d)


@pytest.mark.parametrize("d", [0, 1, 3])
def test_endo_identity(d):
    assert kernel_of_endomorphism_on_quotient(M.zeros(d, 0), M.identity(d)).is_trivial


def _brute_kernel_rank_swap():
    """Cosets of Z^2 / <(1,-1)> are labelled by x + y. Enumerate a box and
    collect the labels of x with (swap - 1) x in <(1,-1)>."""
    labels = set()
    for x in range(-4, 5):
        for y in range(-4, 5):
            v = (y - x, x - y)
            if v[0] + v[1] == 0:  # in the relation lattice
                labels.add(x + y)
    return labels


def test_endo_swap_on_coinvariants():
    labels = _brute_kernel_rank_swap()
    assert labels == set(range(-8, 9))  # every coset: the kernel is all of Z
    R = M([[1], [-1]])
    F = M([[0, 1], [1, 0]])
    assert kernel_of_endomorphism_on_quotient(R, F - M.identity(2)) == FinAbGroup(1)


def test_endo_not_well_defined():
    R = M([[2], [0]])
    F = M([[0, 1], [1, 0]])
    with pytest.raises(NotWellDefined):
        kernel_of_endomorphism_on_quotient(R, F)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4, 6).filter(lambda A: A.nrows == A.ncols))
def test_endo_without_relations_is_kernel(A):
    G = kernel_of_endomorphism_on_quotient(M.zeros(A.nrows, 0), A)
    assert G == FinAbGroup(A.nrows - rank(A))


# -- FinAbGroup -------------------------------------------------------------

def test_finab_validation():
    with pytest.raises(InvalidInput):
        FinAbGroup(0, (1,))
    with pytest.raises(InvalidInput):
        FinAbGroup(0, (4, 6))


def test_finab_from_orders_and_sum():
    assert FinAbGroup.from_orders(0, [2, 3]) == FinAbGroup(0, (6,))
    assert FinAbGroup(1, (2,)) + FinAbGroup(0, (2,)) == FinAbGroup(1, (2, 2))
    assert str(FinAbGroup(2, (2, 4))) == "ℤ^2 ⊕ ℤ/2 ⊕ ℤ/4"
    assert str(FinAbGroup()) == "0"
    assert FinAbGroup().torsion_order == 1
