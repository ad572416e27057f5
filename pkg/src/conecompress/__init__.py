"""Find a small integral vector in an unknown polyhedral cone.

Given only the dimension n, a cap d on the magnitude of the unknown
constraint coefficients, and one non-negative integral witness solution,
:func:`compress` constructs another non-zero integral solution whose
largest entry is at most (2d)**(2**(n-1) - 1) / 2**(n-1), along with a
full per-level audit trace. The :mod:`conecompress.verify` module checks
any claimed solution by exhaustive enumeration, independently of the
construction.
"""

from .compress import (
    BoundResult,
    CompressOutput,
    DEFAULT_COMPRESS_BUDGET,
    PartialSolution,
    StepRecord,
    best_head_coefficient,
    compress,
    step,
    tightest_lower,
    tightest_upper,
)
from .errors import (
    BudgetExceededError,
    ConeCompressError,
    FormatError,
    HiddenInstanceError,
    InternalInconsistencyError,
    MissingHiddenSectionError,
    RejectionCapError,
    ValidationError,
)
from .generate import EndToEndReport, HiddenInstance, end_to_end, generate
from .model import (
    Constraint,
    LevelCone,
    ProblemInput,
    SortedWitness,
    bound_value,
    coefficient_cap,
    unsort,
    validate,
)
from .numeric import Ratio, ceil_div, floor_div, ratio_cmp, ratio_make
from .verify import (
    DEFAULT_VERIFY_BUDGET,
    Verdict,
    bound_check,
    cone_membership,
    level_membership,
    matrix_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "BudgetExceededError",
    "CompressOutput",
    "ConeCompressError",
    "Constraint",
    "DEFAULT_COMPRESS_BUDGET",
    "DEFAULT_VERIFY_BUDGET",
    "EndToEndReport",
    "FormatError",
    "HiddenInstance",
    "HiddenInstanceError",
    "InternalInconsistencyError",
    "LevelCone",
    "MissingHiddenSectionError",
    "PartialSolution",
    "ProblemInput",
    "Ratio",
    "RejectionCapError",
    "SortedWitness",
    "StepRecord",
    "ValidationError",
    "Verdict",
    "best_head_coefficient",
    "bound_check",
    "bound_value",
    "ceil_div",
    "coefficient_cap",
    "compress",
    "cone_membership",
    "end_to_end",
    "floor_div",
    "generate",
    "level_membership",
    "matrix_check",
    "ratio_cmp",
    "ratio_make",
    "step",
    "tightest_lower",
    "tightest_upper",
    "unsort",
    "validate",
]
