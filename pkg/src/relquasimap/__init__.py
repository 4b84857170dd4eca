"""
Fixed-point combinatorics and characters for relative quasimaps to the flag
variety: Bruhat path counts, Kazhdan-Lusztig polynomials, Laumon fixed points
and tangent weights, bubble chains of the distinguished component, and the
tilting decomposition of the resulting modules.
"""

from .exceptions import InputError, VerificationError
from .kl import IntPolynomial, kl_polynomial, p_value, verify_inverse_kl
from .laumon import (
    LaumonPoint, TangentCharacter, Weight, chi_hom, count_v,
    enumerate_fixed_points, f_weight, kostant_partition, tangent_character,
)
from .qmrel import (
    BubbleChain, RelFixedPoint, WeightParameter, degree_offset, edge_data,
    enumerate_chains, enumerate_rel_fixed_points, graded_dim_direct,
    graded_dim_formula, node_weights, rel_f_weight,
)
from .repn import (
    Character, MultiplicityRow, check_cartan_commutators, check_decomposition,
    h_i_weight, h_module_character, tilting_character, tilting_multiplicities,
    verma_character, verma_filtration_multiplicities,
)
from .weyl import (
    BruhatEdge, EdgeMode, Permutation, bruhat_edges, bruhat_leq, identity,
    length, longest_element, path_count, permutations,
)

__version__ = "0.1.0"
