"""Invariants of linear rank-metric codes: Schur-power dimension sequences,
linear sets, q-sum and delta-rank distinguishers, and zero-coset analysis
of the associated bilinear-type forms."""

from .errors import BudgetError, PreconditionError, RankInvError
from .gfcore import (
    FieldCtx,
    FieldElement,
    field_for,
    field_new,
    frobenius,
    get_field,
    in_subfield,
    trace_rel,
)
from .linalg import MatrixFqm, RrefResult, fq_rank, rref, solve_right_kernel
from .rankcodes import (
    RankMetricCode,
    code_qpower,
    delta_rank,
    gabidulin,
    galois_intersection_dim,
    is_mrd,
    isometry_image,
    min_rank_distance,
    parse_code,
    qsum_dim,
    random_systematic,
    rank_weight,
    serialize_code,
    systematic_form,
)
from .geometry import (
    ExtendedMatrix,
    LinearSet,
    QSystem,
    extended_matrix,
    is_scattered,
    is_scattered_wrt_hyperplanes,
    length_lower_bound,
    linear_set,
    system_of,
)
from .hilbert import (
    HilbertReport,
    classify,
    fs_intersection_dim_eval,
    fs_intersection_dim_system,
    h_qplus1_closed_form,
    h_qsplus1_upper_bound,
    hilbert_sequence,
    regularity_lower_bound,
    schur_power_dim_oracle,
    schur_product_dim,
)
from .forms import (
    CosetZeroReport,
    FsForm,
    coset_equal,
    linearity_check,
    max_zero_form_check,
    parse_form,
    serialize_form,
    tightness_form,
    vanishes_on_coset,
    zero_cosets,
    zero_cosets_delta,
)
from .experiment import ExperimentConfig, ExperimentSummary, run_experiment

__all__ = [
    "BudgetError", "PreconditionError", "RankInvError",
    "FieldCtx", "FieldElement", "field_new", "field_for", "get_field",
    "frobenius", "trace_rel", "in_subfield",
    "MatrixFqm", "RrefResult", "rref", "fq_rank", "solve_right_kernel",
    "RankMetricCode", "gabidulin", "random_systematic", "rank_weight",
    "min_rank_distance", "is_mrd", "code_qpower", "qsum_dim",
    "systematic_form", "delta_rank", "galois_intersection_dim",
    "isometry_image", "serialize_code", "parse_code",
    "QSystem", "ExtendedMatrix", "LinearSet", "system_of", "extended_matrix",
    "linear_set", "is_scattered", "is_scattered_wrt_hyperplanes",
    "length_lower_bound",
    "HilbertReport", "hilbert_sequence", "schur_product_dim",
    "schur_power_dim_oracle", "h_qplus1_closed_form", "h_qsplus1_upper_bound",
    "fs_intersection_dim_system", "fs_intersection_dim_eval",
    "regularity_lower_bound", "classify",
    "FsForm", "CosetZeroReport", "vanishes_on_coset", "coset_equal",
    "zero_cosets", "zero_cosets_delta", "linearity_check",
    "max_zero_form_check", "tightness_form", "serialize_form", "parse_form",
    "ExperimentConfig", "ExperimentSummary", "run_experiment",
]

__version__ = "0.1.0"
