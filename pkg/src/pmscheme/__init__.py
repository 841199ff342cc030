"""Exact eigenvalue theory of the perfect matching association scheme.

Closed-form and interpolated eigenvalue tables, spectral gaps, merge-ratio
laws and quotient/diameter analyses, all cross-checked against a brute-force
oracle over perfect matchings of K_{2n}.
"""

__version__ = "0.1.0"

from .errors import (
    AmbiguousRowAssignment,
    FitInconsistent,
    FitUnderdetermined,
    GuardExceeded,
    IncompleteTable,
    SchemeError,
)
from .partitions import (
    ContentVector,
    CycleType,
    Dominance,
    Partition,
    content,
    dim_hook,
    dominance_compare,
    double_factorial,
    frobenius_dim,
    generate_partitions,
    irr_char,
    parse_partition,
    successors,
)
from .symfunc import (
    CATALOG_PREFIXES,
    MonomialBasis,
    PolyT,
    PowerSumExpr,
    delta_closed_forms,
    delta_eval,
    e_catalog,
    eval_expr,
    fit_e_mu,
    monomial_basis,
    parse_power_sum_expr,
    parse_polyt,
)
from .matchings import (
    DiameterResult,
    IntersectionData,
    Matching,
    QuotientMatrix,
    base_matching,
    degree_count,
    degree_histogram,
    diameter,
    enumerate_matchings,
    intersection_numbers,
    parse_matching,
    quotient_counts,
    quotient_counts_all,
    quotient_counts_from,
    rank,
    relation,
    representative,
    unrank,
)
from .spectra import (
    BelowFamilyThreshold,
    DimensionBound,
    FamilySpec,
    GapReport,
    InductionReport,
    degbou,
    gap_report,
    eq5_holds,
    family_second_eig,
    family_threshold,
    hook_gap,
    hook_quotient_closed_forms,
    double_factorial_ratio_bound,
    double_factorial_ratio_bound_range,
    max_min_valency,
    phi_n11,
    small_dim_cutoff,
    small_dim_eigenspaces,
    threshold_n,
    trace_identity_check,
    valency,
    verify_induction_step,
    zonal_check,
)
from .tables import (
    ConjectureVerdict,
    EigTable,
    build_table_formulas,
    build_table_oracle,
    derangement_spectrum,
    gap_scan,
    second_largest,
    second_largest_abs,
    verify_column_orthogonality,
    verify_conjecture,
    verify_structure_constants,
)
from .ratios import (
    MergeSpec,
    RatioReport,
    all_merges,
    merge_constant,
    gap_ratio_report,
    require_gap_ratio,
    tau_ratio,
    valency_ratio,
)
