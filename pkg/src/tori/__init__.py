"""Local and global invariants of algebraic tori from their Galois lattices."""
from .abelian import (FinAbGroup, SnfDecomposition, cokernel_structure, kernel_lattice,
                      kernel_of_endomorphism_on_quotient, smith_normal_form,
                      subgroup_structure_in_quotient)
from .assembly import (GlobalTorusSpec, PlaceData, SymbolicValue, finite_part, pole_order,
                       shyr_invariant)
from .catalog import norm_one_torus, split_torus, weil_restriction
from .groups import FiniteGroup, Subgroup, cyclic
from .isogeny import check_TI_vs_TupperI, isogenous
from .lattice import (GaloisLattice, canonical_decomposition, character, coinvariants,
                      direct_sum, dual_lattice, h1, invariants_lattice, restrict, trace_map,
                      validate)
from .local import (LocalReport, LocalTorusData, artin_l_factor, check_good_reduction,
                    component_group, frobenius_on_coinvariants, local_report, local_shyr_factor,
                    point_count_good_reduction)
from .matrix import IntMatrix

__version__ = "0.1.0"
