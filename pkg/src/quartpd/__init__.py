"""Positive definiteness of 4th-order symmetric tensors (quartic forms).

Exact analytic criteria for binary quartics and a cyclic ternary family,
a numeric sphere-minimization oracle, and a verification harness for a
catalog of ternary quartic inequalities.
"""

from .binary import (
    BinaryQuartic,
    DiscriminantParts,
    check_normalized_pm1,
    classify as classify_binary,
    discriminant_parts,
    is_positive_definite,
    is_positive_semidefinite,
    prefilter_zero_diagonal,
)
from .cyclic import (
    CyclicTernary,
    FamilyVerdict,
    RelaxedCyclicTernary,
    classify_cyclic,
    classify_relaxed,
    embed,
    necessity_bound_check,
)
from .inequalities import (
    InequalityReport,
    WeightedInequality,
    builtin_catalog,
    exact_spot_check,
    verify,
)
from .oracle import (
    OracleConfig,
    OracleResult,
    classify_numeric,
    sphere_minimize,
    zero_set_probe,
)
from .quadext import QuadExt, sqrt_eq, sqrt_leq, sqrt_lt
from .tensor import SymmetricTensor4, diag_ones, multiplicity, rank_one, symmetrize
from .verdict import Kind, PatternMismatchError, Verdict

__all__ = [
    "BinaryQuartic",
    "CyclicTernary",
    "DiscriminantParts",
    "FamilyVerdict",
    "InequalityReport",
    "Kind",
    "OracleConfig",
    "OracleResult",
    "PatternMismatchError",
    "QuadExt",
    "RelaxedCyclicTernary",
    "SymmetricTensor4",
    "Verdict",
    "WeightedInequality",
    "builtin_catalog",
    "check_normalized_pm1",
    "classify_binary",
    "classify_cyclic",
    "classify_numeric",
    "classify_relaxed",
    "diag_ones",
    "discriminant_parts",
    "embed",
    "exact_spot_check",
    "is_positive_definite",
    "is_positive_semidefinite",
    "multiplicity",
    "necessity_bound_check",
    "prefilter_zero_diagonal",
    "rank_one",
    "sphere_minimize",
    "sqrt_eq",
    "sqrt_leq",
    "sqrt_lt",
    "symmetrize",
    "verify",
    "zero_set_probe",
]
