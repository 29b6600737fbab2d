"""Unit groups of integral domains, torsion-free rings and reduced rings.

Exact deciders for which finitely generated abelian groups occur as unit
groups, witness constructions inside products of cyclotomic rings, and
brute-force verification by exhaustive enumeration of torsion units.
"""

from .classify import (
    AdmissibilityReport,
    Verdict,
    Witness,
    admissibility,
    build_witness,
    decide_domain_char0,
    decide_domain_charp,
    decide_domain_integral_over_Z,
    decide_reduced,
    decide_torsion_free,
    min_rank_search,
    minimal_order_moduli,
    verify_witness_group,
    witness_moduli,
)
from .cycring import (
    DEFAULT_BUDGET,
    BudgetError,
    CycloElem,
    IntegerLattice,
    crt_is_surjective,
    maximal_order_rank,
    norm_of_phi_eval,
    psi_image,
    rational_crt_contains,
    subring_span,
    torsion_units_of_quotient,
    torsion_units_of_subring,
)
from .groups import (
    FGAbelianGroup,
    FiniteAbelianGroup,
    OddOrderError,
    StandardDecomposition,
    abelian_groups_of_order,
    abelian_groups_upto,
    field_units_partition,
    g_min,
    group_from_order_counts,
    is_rank_zero_family,
    parse_group,
    reduced_split_search,
    standard_decomposition,
)
from .numth import (
    CoeffExtPoly,
    IntPoly,
    RatPoly,
    cyclotomic_poly,
    euler_phi,
    factorize,
    phi_at_1,
    prime_power_ratio,
    relative_min_poly,
    resultant,
    unit_rank,
)

__version__ = "0.1.0"
