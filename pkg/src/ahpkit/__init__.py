"""Priority vectors from pairwise comparison judgment matrices.

Solves single-expert matrices by row geometric means (the minimizer of
the squared log residuals), measures inconsistency, aggregates weighted
expert groups, and cross-checks the aggregation against its
divergence-minimization formulation. Ships with file formats, a session
store, a command line, and an HTTP service.
"""

from .eigen import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    EigenReport,
    inconsistency_index,
    saaty_priorities,
)
from .errors import (
    AhpError,
    ConflictError,
    DimensionError,
    FirstEntryNotOne,
    IncompleteMatrix,
    IoError,
    LengthMismatch,
    MismatchedDimensions,
    NonPositiveComponent,
    NonPositiveEntry,
    NotFound,
    ParseError,
    ReciprocityViolation,
    ScaleViolation,
    ValidationError,
    WeightError,
)
from .formats import (
    dump_json,
    load_matrix,
    matrix_from_dict,
    matrix_to_dict,
    save_matrix,
    save_result,
)
from .group import (
    GroupJudgment,
    GroupResult,
    group_lls_priorities,
    kl_aggregate,
    kl_divergence,
    verify_equivalence,
    weighted_divergence,
)
from .lls import (
    DEFAULT_CONSISTENCY_TOL,
    ConsistencyReport,
    PriorityVector,
    consistency_report,
    consistent_approximation,
    lls_linear_system_oracle,
    lls_objective,
    lls_priorities,
)
from .matrix import (
    SAATY_MAX,
    SAATY_MIN,
    JudgmentMatrix,
    ScaleMode,
    consistent_completion,
    is_consistent_exact,
    transitivity_violations,
    validate_judgment_matrix,
)
from .sampling import (
    consistent_matrix,
    log_uniform_priorities,
    perturbed_matrix,
    random_group,
)
from .store import DecisionSession, ExpertSlot, SessionSettings, SessionStore

__version__ = "0.1.0"

__all__ = [
    "AhpError",
    "ConflictError",
    "ConsistencyReport",
    "DecisionSession",
    "DEFAULT_CONSISTENCY_TOL",
    "DEFAULT_MAX_ITER",
    "DEFAULT_TOL",
    "DimensionError",
    "EigenReport",
    "ExpertSlot",
    "FirstEntryNotOne",
    "GroupJudgment",
    "GroupResult",
    "IncompleteMatrix",
    "IoError",
    "JudgmentMatrix",
    "LengthMismatch",
    "MismatchedDimensions",
    "NonPositiveComponent",
    "NonPositiveEntry",
    "NotFound",
    "ParseError",
    "PriorityVector",
    "ReciprocityViolation",
    "SAATY_MAX",
    "SAATY_MIN",
    "ScaleMode",
    "ScaleViolation",
    "SessionSettings",
    "SessionStore",
    "ValidationError",
    "WeightError",
    "consistency_report",
    "consistent_approximation",
    "consistent_completion",
    "consistent_matrix",
    "dump_json",
    "group_lls_priorities",
    "inconsistency_index",
    "is_consistent_exact",
    "kl_aggregate",
    "kl_divergence",
    "lls_linear_system_oracle",
    "lls_objective",
    "lls_priorities",
    "load_matrix",
    "log_uniform_priorities",
    "matrix_from_dict",
    "matrix_to_dict",
    "perturbed_matrix",
    "random_group",
    "saaty_priorities",
    "save_matrix",
    "save_result",
    "transitivity_violations",
    "validate_judgment_matrix",
    "verify_equivalence",
    "weighted_divergence",
]
