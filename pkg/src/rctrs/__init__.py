"""Exact-arithmetic construction and analysis of twisted evaluation codes.

The package builds generalized Reed-Solomon codes and their row- and
column-twisted relatives over arbitrary finite fields GF(p^m), checks
the MDS property (exhaustive minors and closed-form criteria), computes
Schur-square dimensions, and runs the distinguishers that separate the
constructed codes from RS and column-twisted RS codes.  Everything is
integer arithmetic on element indices; no floating point anywhere.
"""

from .errors import (
    DegenerateBCError,
    DegreeMismatchError,
    FieldMismatchError,
    HookOutOfRangeError,
    InvalidSpecError,
    LengthMismatchError,
    MembershipViolationError,
    MethodDisagreementError,
    NotADivisorError,
    NotPrimeError,
    NotSquareError,
    OrderDoesNotDivideError,
    ParseError,
    ReducibleError,
    SizeMismatchError,
    UnsupportedExtendedGeneralHError,
    WrongHookTwistError,
)
from .gf import (
    Field,
    FieldElement,
    MultiplicativeSubgroup,
    SubfieldView,
    field_create,
    is_prime,
    prime_factors,
    subgroup_of_order,
)
from .linalg import (
    Matrix,
    deleted_row_vandermonde_det,
    deleted_row_vandermonde_matrix,
    det,
    elementary_symmetric,
    matrix_from_text,
    matrix_to_text,
    null_space,
    rank,
    row_space_equal,
    rref,
    vandermonde_det,
    vandermonde_matrix,
)
from .codes import (
    CodeFamily,
    CodeSpec,
    GeneratorMatrix,
    encode,
    eval_poly,
    generator_matrix,
    twist_space_basis,
)
from .mds import (
    DEFAULT_DISTANCE_BUDGET,
    DistanceResult,
    MdsVerdict,
    check_mds,
    closed_form_for,
    colex_subsets,
    mds_by_minors,
    mds_closed_form_general,
    mds_closed_form_h0,
    mds_closed_form_hk1,
    min_distance,
)
from .schur import (
    Isometry,
    SchurReport,
    apply_isometry,
    ctrs_distinguisher,
    is_non_rs,
    random_isometry,
    schur_report,
    schur_square_dim,
    schur_square_rows,
    schur_vec,
)
from .construct import (
    ConstructedCode,
    SubgroupConstructionParams,
    build_subfield_chain_code,
    build_subgroup_code,
    corollary_lengths,
    corollary_witness_codes,
    subgroup_eval_points,
)
from .specfile import (
    codespec_from_text,
    codespec_read,
    codespec_to_text,
    codespec_write,
)
from .report import BUDGET_ENV_VAR, AnalysisReport, analyze, distance_budget
from .golden import GOLDEN_KEYS, GoldenCase, check_case, golden_cases

__version__ = "1.0.0"

__all__ = [
    "AnalysisReport",
    "BUDGET_ENV_VAR",
    "CodeFamily",
    "CodeSpec",
    "ConstructedCode",
    "DEFAULT_DISTANCE_BUDGET",
    "DegenerateBCError",
    "DegreeMismatchError",
    "DistanceResult",
    "Field",
    "FieldElement",
    "FieldMismatchError",
    "GOLDEN_KEYS",
    "GeneratorMatrix",
    "GoldenCase",
    "HookOutOfRangeError",
    "InvalidSpecError",
    "Isometry",
    "LengthMismatchError",
    "Matrix",
    "MdsVerdict",
    "MembershipViolationError",
    "MethodDisagreementError",
    "MultiplicativeSubgroup",
    "NotADivisorError",
    "NotPrimeError",
    "NotSquareError",
    "OrderDoesNotDivideError",
    "ParseError",
    "ReducibleError",
    "SchurReport",
    "SizeMismatchError",
    "SubfieldView",
    "SubgroupConstructionParams",
    "UnsupportedExtendedGeneralHError",
    "WrongHookTwistError",
    "analyze",
    "apply_isometry",
    "build_subfield_chain_code",
    "build_subgroup_code",
    "check_case",
    "check_mds",
    "closed_form_for",
    "codespec_from_text",
    "codespec_read",
    "codespec_to_text",
    "codespec_write",
    "colex_subsets",
    "corollary_lengths",
    "corollary_witness_codes",
    "ctrs_distinguisher",
    "deleted_row_vandermonde_det",
    "deleted_row_vandermonde_matrix",
    "det",
    "distance_budget",
    "elementary_symmetric",
    "encode",
    "eval_poly",
    "field_create",
    "generator_matrix",
    "golden_cases",
    "is_non_rs",
    "is_prime",
    "matrix_from_text",
    "matrix_to_text",
    "mds_by_minors",
    "mds_closed_form_general",
    "mds_closed_form_h0",
    "mds_closed_form_hk1",
    "min_distance",
    "null_space",
    "prime_factors",
    "random_isometry",
    "rank",
    "row_space_equal",
    "rref",
    "schur_report",
    "schur_square_dim",
    "schur_square_rows",
    "schur_vec",
    "subgroup_eval_points",
    "subgroup_of_order",
    "twist_space_basis",
    "vandermonde_det",
    "vandermonde_matrix",
]
