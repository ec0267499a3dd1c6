"""Exact stratification toolkit for spaces of pairwise-orthogonal frames.

A frame here is a d x n matrix whose distinct columns are orthogonal
under the standard bilinear form; the variety of all such matrices
breaks into strata indexed by the anisotropic and isotropic column
ranks.  The package computes stratum dimensions, irreducible component
censuses, and the degeneration order exactly over the integers, decides
ring-theoretic properties of the defining ideal through closed-form
dimension thresholds, and certifies smooth points by evaluating the
orthogonality jacobian over a large prime field.
"""

from ._kernels import backend_name, has_compiled_backend
from .exactcmp import (
    ceil_half,
    ceil_minus_sqrt,
    compare_minus_sqrt,
    floor_half,
    floor_minus_sqrt,
)
from .exactfield import (
    DEFAULT_PRIME,
    FieldContext,
    FrameInvariants,
    FrameMatrix,
    bilinear,
    frame_invariants,
    gram,
    is_probable_prime,
    make_context,
    matrix_rank,
    nullspace,
    seeded_rng,
    sqrt_mod,
)
from .strata import (
    BoundaryKind,
    BoundarySegment,
    ComponentRecord,
    ComponentReport,
    FrameSpaceParams,
    MaximizationResult,
    PosetRelation,
    PosetVerdict,
    StratumIndex,
    boundary,
    boundary_set,
    component_count,
    component_report,
    dimension_polynomial,
    endpoints,
    enumerate_domain,
    in_domain,
    maximal_strata,
    maximize_dimension,
    poset_compare,
    principal_dimension,
    stratum_dimension,
)
from .thresholds import (
    LssCertificate,
    PropertyReport,
    ReducedStatus,
    ThresholdTriple,
    UfdStatus,
    certify_lss,
    ci_threshold,
    classify_ring,
    meets_ci_cutoff,
    meets_prime_cutoff,
    prime_threshold,
    prime_ufd_disagreements,
    threshold_triple,
    ufd_threshold,
    verify_parity_thresholds,
)
from .veronese import (
    SquaresSample,
    check_generic_identity,
    decomposed_rank_target,
    expected_squares_dimension,
    isotropic_rank_target,
    monomial_pairs,
    squares_matrix,
    squares_span_dimension,
)
from .witness import (
    JacobianCertificate,
    JacobianTemplate,
    PerturbationWitness,
    SearchExhaustedError,
    boundary_smooth_witness,
    build_jacobian,
    certify_smooth,
    certify_smooth_isotropic,
    extend_witness,
    jacobian_rank,
    perturb_increase_anisotropic,
    perturb_increase_isotropic,
    required_rank_bound,
    sample_stratum_point,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryKind",
    "BoundarySegment",
    "ComponentRecord",
    "ComponentReport",
    "DEFAULT_PRIME",
    "FieldContext",
    "FrameInvariants",
    "FrameMatrix",
    "FrameSpaceParams",
    "JacobianCertificate",
    "JacobianTemplate",
    "LssCertificate",
    "MaximizationResult",
    "PerturbationWitness",
    "PosetRelation",
    "PosetVerdict",
    "PropertyReport",
    "ReducedStatus",
    "SearchExhaustedError",
    "SquaresSample",
    "StratumIndex",
    "ThresholdTriple",
    "UfdStatus",
    "backend_name",
    "bilinear",
    "boundary",
    "boundary_set",
    "boundary_smooth_witness",
    "build_jacobian",
    "ceil_half",
    "ceil_minus_sqrt",
    "certify_lss",
    "certify_smooth",
    "certify_smooth_isotropic",
    "check_generic_identity",
    "ci_threshold",
    "classify_ring",
    "compare_minus_sqrt",
    "component_count",
    "component_report",
    "decomposed_rank_target",
    "dimension_polynomial",
    "endpoints",
    "enumerate_domain",
    "expected_squares_dimension",
    "extend_witness",
    "floor_half",
    "floor_minus_sqrt",
    "frame_invariants",
    "gram",
    "has_compiled_backend",
    "in_domain",
    "is_probable_prime",
    "isotropic_rank_target",
    "jacobian_rank",
    "make_context",
    "matrix_rank",
    "maximal_strata",
    "maximize_dimension",
    "meets_ci_cutoff",
    "meets_prime_cutoff",
    "monomial_pairs",
    "nullspace",
    "perturb_increase_anisotropic",
    "perturb_increase_isotropic",
    "poset_compare",
    "prime_threshold",
    "prime_ufd_disagreements",
    "principal_dimension",
    "required_rank_bound",
    "sample_stratum_point",
    "seeded_rng",
    "sqrt_mod",
    "squares_matrix",
    "squares_span_dimension",
    "stratum_dimension",
    "threshold_triple",
    "ufd_threshold",
    "verify_parity_thresholds",
]
