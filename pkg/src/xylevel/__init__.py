"""Exact-arithmetic invariants of the Drinfeld modular curve of level xy.

Hecke matrices on cuspidal harmonic cochains, Brandt matrices of the
associated Eichler order, Eisenstein-ideal diagnostics, component, cuspidal
and Shimura groups, and verified simultaneous integer conjugacy between the
two Hecke-module realizations.
"""

from .brandt import BrandtPackage, bprime_matrix, brandt_matrix, brandt_t_prime, gamma_perm
from .cochain import (
    CochainXY,
    check_harmonic,
    eisenstein_generator,
    extend_cochain,
    phi_infinity_level,
    phi_infinity_quaternion,
)
from .eisenstein import (
    EdgeSpec,
    EisensteinSeries,
    eisenstein_combination,
    evaluate_on_edge,
    figure_edges,
    series_x,
    series_xy,
    series_y,
    sigma,
    sigma_level,
    sigma_prime,
)
from .errors import (
    NoIntertwiner,
    NonIntegral,
    NoSolution,
    NotIntegral,
    NotRational,
    PrecisionError,
    StructureMismatch,
    UnsupportedOrder,
    XYLevelError,
)
from .ffpoly import (
    CyclotomicInt,
    LaurentSeries,
    MonicPoly,
    PrimeField,
    QuadClass,
    character,
    cyclotomic_as_integer,
    is_irreducible_deg2,
    laurent_coeff,
    monic_divisors,
)
from .hecke import (
    HeckePackage,
    LevelParams,
    discriminant,
    eisenstein_quotient,
    gekeler_matrix,
    gorenstein_search,
    hecke_t_zero,
)
from .invariants import (
    CuspidalGroups,
    JLKernelData,
    component_group_fp,
    component_group_pq,
    cuspidal_group,
    eisenstein_space_bruteforce,
    jl_kernel_conjecture,
    shimura_group,
    supersingular_count,
)
from .jl import (
    ConjugacyReport,
    build_and_verify_conjugator,
    find_alpha,
    find_conjugator_lattice,
    pairing_gram,
    verify_conjugator,
)
from .zlinalg import (
    AbelianGroup,
    charpoly,
    det,
    express_in_span,
    nullity_mod_ell,
    roots_bounded_by,
    smith_normal_form,
    trace_form_discriminant,
)

__version__ = "0.1.0"
