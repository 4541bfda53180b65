"""Exact desk-scale verification of a colored-permutation descent identity.

The identity equates, for positive integers r and n, the height-generating
sum of ([k+1]_q + u[r-1]_u[k]_q)^n t^k with the joint (maj, des, col)
distribution over all r-colored permutations of n letters divided by
prod_{j=0}^n (1 - q^j t).  Every construction used in its geometric proof
is implemented and checked independently by brute-force enumeration.
"""

from .poly import (
    CoefficientOverflowError,
    Monomial,
    TruncatedPoly,
    expand_denominator,
    first_difference,
    from_records,
    lhs_term,
    q_integer,
    to_records,
    u_integer,
)
from .wreath import (
    BudgetExceededError,
    ColoredLetter,
    ColoredPermutation,
    DEFAULT_BUDGET,
    EpsilonVector,
    EQUAL,
    GREATER,
    LESS,
    bz_compare,
    col,
    colored_window,
    des,
    descent_set,
    enumerate_group,
    g_epsilon,
    group_order,
    maj,
    numerator,
    ordinary_descent_set,
)
from .geometry import (
    CubeSliceSpec,
    LatticePoint,
    cone_sum,
    delta_membership,
    enumerate_slice,
    figure_grid,
    find_simplex,
    full_slice_sum,
    lattice_point,
    m,
    m_prime,
    slice_membership,
    slice_sum,
)
from .identity import (
    Partition,
    VerificationReport,
    composition_to_partition,
    descent_shift_check,
    find_pi_for_composition,
    g_epsilon_gf,
    omega_map,
    rho,
    verify_corollary,
    verify_lemma_same_support,
    verify_lemma_triple_preserving,
    verify_prop_few_colors,
    verify_theorem,
)

__version__ = "0.1.0"
