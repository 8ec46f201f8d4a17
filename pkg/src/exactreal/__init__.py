"""Exact real arithmetic on rational-interval approximation oracles."""

from .constructions import (
    DiagCertificate,
    Diagonalization,
    LiouvilleReport,
    completeness_sift,
    diagonalize,
    e_const,
    liouville,
    liouville_check,
    sqrt_pos,
    sup_finite,
)
from .errors import (
    BudgetExhausted,
    ContainsZero,
    DeskScaleExceeded,
    ExactRealError,
    InvariantViolation,
    NonPositiveEnlargement,
    NotSeparated,
    OracleFailure,
    SignUnknown,
)
from .expr import ParseError, evaluate, parse, unparse
from .interval import (
    Interval,
    format_rational,
    iv_deep_margin,
    iv_deep_subset,
    iv_enlarge,
    iv_fifths,
    iv_intersects,
    iv_le_exists,
    iv_lt_forall,
    iv_mul,
    iv_neg,
    iv_recip,
    iv_subset,
    iv_sum,
    parse_rational,
)
from .real import (
    Budget,
    Comparison,
    Membership,
    Real,
    Verdict,
    add,
    archimedean_bound,
    bound,
    compare,
    decimal_expansion,
    distance_bound,
    div,
    embed,
    member,
    mul,
    neg,
    rational_between,
    recip,
    sub,
    to_decimal,
)
from .sequences import (
    ConvergenceEvidence,
    ConvergenceVerdict,
    RealSequence,
    check_convergence,
    hat_member,
    real_of_cauchy,
)

__all__ = [
    "Budget",
    "BudgetExhausted",
    "Comparison",
    "ContainsZero",
    "ConvergenceEvidence",
    "ConvergenceVerdict",
    "DeskScaleExceeded",
    "DiagCertificate",
    "Diagonalization",
    "ExactRealError",
    "Interval",
    "InvariantViolation",
    "LiouvilleReport",
    "Membership",
    "NonPositiveEnlargement",
    "NotSeparated",
    "OracleFailure",
    "ParseError",
    "Real",
    "RealSequence",
    "SignUnknown",
    "Verdict",
    "add",
    "archimedean_bound",
    "bound",
    "check_convergence",
    "compare",
    "completeness_sift",
    "decimal_expansion",
    "diagonalize",
    "distance_bound",
    "div",
    "e_const",
    "embed",
    "evaluate",
    "format_rational",
    "hat_member",
    "iv_deep_margin",
    "iv_deep_subset",
    "iv_enlarge",
    "iv_fifths",
    "iv_intersects",
    "iv_le_exists",
    "iv_lt_forall",
    "iv_mul",
    "iv_neg",
    "iv_recip",
    "iv_subset",
    "iv_sum",
    "liouville",
    "liouville_check",
    "member",
    "mul",
    "neg",
    "parse",
    "parse_rational",
    "rational_between",
    "real_of_cauchy",
    "recip",
    "sqrt_pos",
    "sub",
    "sup_finite",
    "to_decimal",
    "unparse",
]
