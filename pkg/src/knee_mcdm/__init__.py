"""Knee selection on approximate Pareto fronts.

Given a finite front, three provably-agreeing rules pick the same most
preferred equivalence class of solutions: minimum Manhattan distance from
the normalized ideal vector, a weighted sum with one-over-spread weights,
and a knockout tournament of pairwise net-improvement comparisons.
"""

from .errors import (
    AllDimensionsDegenerate,
    DegenerateDimension,
    DegenerateSpreadWarning,
    DuplicateId,
    EmptyFront,
    EquivalenceViolation,
    InvalidSpec,
    KneeMCDMError,
    NoExpectation,
    NonFiniteValue,
    ParseError,
    UnknownId,
)
from .front import (
    Front,
    NormalizedFront,
    dominance_filter,
    load_front,
    normalize,
    write_front,
)
from .generators import (
    FAMILIES,
    Expectation,
    FrontSpec,
    expected_selection,
    generate,
    random_nondominated_front,
)
from .selection import (
    DEFAULT_EPSILON,
    ComparisonRecord,
    Decision,
    EquivalenceClass,
    EquivalenceClasses,
    EquivalenceReport,
    SolutionScore,
    build_classes,
    improvement_percentage,
    net_improvement,
    rank,
    select_dnc,
    select_mmd,
    select_ws,
    verify_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "AllDimensionsDegenerate",
    "ComparisonRecord",
    "DEFAULT_EPSILON",
    "Decision",
    "DegenerateDimension",
    "DegenerateSpreadWarning",
    "DuplicateId",
    "EmptyFront",
    "EquivalenceClass",
    "EquivalenceClasses",
    "EquivalenceReport",
    "EquivalenceViolation",
    "Expectation",
    "FAMILIES",
    "Front",
    "FrontSpec",
    "InvalidSpec",
    "KneeMCDMError",
    "NoExpectation",
    "NonFiniteValue",
    "NormalizedFront",
    "ParseError",
    "SolutionScore",
    "UnknownId",
    "build_classes",
    "dominance_filter",
    "expected_selection",
    "generate",
    "improvement_percentage",
    "load_front",
    "net_improvement",
    "normalize",
    "random_nondominated_front",
    "rank",
    "select_dnc",
    "select_mmd",
    "select_ws",
    "verify_equivalence",
    "write_front",
]
