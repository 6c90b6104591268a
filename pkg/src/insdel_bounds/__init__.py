"""Rate bounds for list-decodable insertion-deletion codes.

A q-ary code is list-decodable against ``gamma`` insertions and
``delta`` deletions per symbol if every corrupted word maps back to a
bounded list of codewords.  This package computes every closed-form
outer (impossibility) and inner (random-coding) bound on the best
achievable rate at a given ``(gamma, delta, q)``, certifies the
convexity that glues the outer bounds together, and cross-checks the
formulas against exact brute-force combinatorics on small instances.

Quick start::

    import insdel_bounds as ib

    ib.combined_outer_bound(q=5, gamma=0.4, delta=0.2).rate
    ib.inner_bound(5, 0.4, 0.2).rate
    ib.build_polygon(5).contains((0.4, 0.2))
"""

from .bounds import (
    SRC_COMBINED_OUTER,
    SRC_DELETION_ONLY,
    SRC_INNER,
    SRC_INSERTION_ONLY,
    SRC_INTERPOLATED_OUTER,
    SRC_LINEAR_OUTER,
    SRC_SPOKE,
    BoundValue,
    ErrorPoint,
    check_alphabet,
    deletion_only_piecewise_bound,
    inner_bound,
    insertion_only_bound,
    q_ary_entropy,
    spoke_bound,
    spoke_surface_hessian,
    spoke_surface_value,
    surface_gamma_max,
)
from .errors import (
    BudgetError,
    DegenerateRayError,
    DegenerateSpokeError,
    DomainError,
    InsdelBoundsError,
)
from .geometry import (
    ResiliencePolygon,
    ScalingResult,
    build_polygon,
    contains,
    linear_outer_bound,
    scaling_alpha,
)
from .montecarlo import McConfig, McReport, run_inner_bound_mc
from .optimizer import (
    GammaSplit,
    InterpolationSetup,
    combined_outer_bound,
    golden_section_minimize,
    interpolated_bound_at_split,
    interpolated_outer_bound,
    interpolation_setup,
    optimal_gamma0,
    outer_bound_breakdown,
)
from .oracles import (
    BallSpec,
    ListDecodabilityVerdict,
    SmallCode,
    TwoSegmentReduction,
    Word,
    alphabet_reduction,
    check_list_decodable,
    containment_probability,
    enumerate_ball,
    enumeration_cap,
    lcs,
    reachable,
    supersequence_count_exact_length,
    two_segment_reduction,
)
from .surface import (
    BOUND_SOURCES,
    SurfaceGrid,
    emit_surface,
    evaluate_surface,
    load_surface_csv,
    load_surface_json,
    point_evaluator,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_SOURCES",
    "BallSpec",
    "BoundValue",
    "BudgetError",
    "DegenerateRayError",
    "DegenerateSpokeError",
    "DomainError",
    "ErrorPoint",
    "GammaSplit",
    "InsdelBoundsError",
    "InterpolationSetup",
    "ListDecodabilityVerdict",
    "McConfig",
    "McReport",
    "ResiliencePolygon",
    "SRC_COMBINED_OUTER",
    "SRC_DELETION_ONLY",
    "SRC_INNER",
    "SRC_INSERTION_ONLY",
    "SRC_INTERPOLATED_OUTER",
    "SRC_LINEAR_OUTER",
    "SRC_SPOKE",
    "ScalingResult",
    "SmallCode",
    "SurfaceGrid",
    "TwoSegmentReduction",
    "Word",
    "alphabet_reduction",
    "build_polygon",
    "check_alphabet",
    "check_list_decodable",
    "combined_outer_bound",
    "containment_probability",
    "contains",
    "deletion_only_piecewise_bound",
    "emit_surface",
    "enumerate_ball",
    "enumeration_cap",
    "evaluate_surface",
    "golden_section_minimize",
    "inner_bound",
    "insertion_only_bound",
    "interpolated_bound_at_split",
    "interpolated_outer_bound",
    "interpolation_setup",
    "lcs",
    "linear_outer_bound",
    "load_surface_csv",
    "load_surface_json",
    "optimal_gamma0",
    "outer_bound_breakdown",
    "point_evaluator",
    "q_ary_entropy",
    "reachable",
    "run_inner_bound_mc",
    "scaling_alpha",
    "spoke_bound",
    "spoke_surface_hessian",
    "spoke_surface_value",
    "supersequence_count_exact_length",
    "surface_gamma_max",
    "two_segment_reduction",
]
