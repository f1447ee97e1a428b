from .engine import (
    ALL_CONSTRAINTS,
    DEFAULT_SEARCH_CAP,
    WITNESS_CAP,
    Certificate,
    CertifierInstance,
    CertifierInternalError,
    ConstraintFlags,
    CounterexampleReport,
    InvalidInstance,
    NotApplicable,
    SearchResult,
    SearchSpaceTooLarge,
    SequencePair,
    Status,
    case_i_excluded,
    certify_empty,
    classify_incidence_zero,
    enumerate_candidates,
    remark_counterexample_report,
    search,
    search_cap,
    search_space_size,
    x_sum_bounds,
)
from .kernel import BACKEND

__all__ = [
    "ALL_CONSTRAINTS",
    "BACKEND",
    "DEFAULT_SEARCH_CAP",
    "WITNESS_CAP",
    "Certificate",
    "CertifierInstance",
    "CertifierInternalError",
    "ConstraintFlags",
    "CounterexampleReport",
    "InvalidInstance",
    "NotApplicable",
    "SearchResult",
    "SearchSpaceTooLarge",
    "SequencePair",
    "Status",
    "case_i_excluded",
    "certify_empty",
    "classify_incidence_zero",
    "enumerate_candidates",
    "remark_counterexample_report",
    "search",
    "search_cap",
    "search_space_size",
    "x_sum_bounds",
]
