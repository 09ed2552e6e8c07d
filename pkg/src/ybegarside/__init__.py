"""Garside structure and affine matrix image of structure groups of
non-degenerate involutive set-theoretic solutions of the Yang-Baxter equation.

Library functions use 0-based generator indices; solution files and the CLI
use 1-based indices.
"""

from .brace import BraceView, brace_add, lambda_map, socle_contains, verify_brace_laws
from .errors import (
    BallGuardExceeded,
    ClassSearchExceeded,
    ClassTooSmall,
    GammaInconsistent,
    GermGuardExceeded,
    GuardExceeded,
    IndexOutOfRange,
    InternalInconsistency,
    NotBijective,
    NotBraided,
    NotInvolutive,
    NotPositive,
    ParseError,
    PiCollision,
    ShapeMismatch,
    SolutionError,
    YBEError,
)
from .estimator import GarsideStructure
from .group import (
    CosetTables,
    Germ,
    GroupElement,
    build_germ,
    coset_tables,
    delta_and_divisors,
    element_from_vector,
)
from .linalg import RationalMatrix, rank_and_basis
from .oracle import ball, check_counts, check_pi_injectivity, check_span_stabilization
from .rep import DimensionReport, decompose, dimension_report, e_matrix, psi, spanning_set
from .solution import (
    SolutionProfile,
    SolutionTable,
    apply_r,
    class_of,
    diagonal_map,
    frozen_words,
    load_solution,
    multipermutation_level,
    profile,
    retraction,
    satisfies_condition_C,
)

__version__ = "0.1.0"

__all__ = [
    "BallGuardExceeded",
    "BraceView",
    "ClassSearchExceeded",
    "ClassTooSmall",
    "CosetTables",
    "DimensionReport",
    "GammaInconsistent",
    "GarsideStructure",
    "Germ",
    "GermGuardExceeded",
    "GroupElement",
    "GuardExceeded",
    "IndexOutOfRange",
    "InternalInconsistency",
    "NotBijective",
    "NotBraided",
    "NotInvolutive",
    "NotPositive",
    "ParseError",
    "PiCollision",
    "RationalMatrix",
    "ShapeMismatch",
    "SolutionError",
    "SolutionProfile",
    "SolutionTable",
    "YBEError",
    "apply_r",
    "ball",
    "brace_add",
    "build_germ",
    "check_counts",
    "check_pi_injectivity",
    "check_span_stabilization",
    "class_of",
    "coset_tables",
    "decompose",
    "delta_and_divisors",
    "diagonal_map",
    "dimension_report",
    "e_matrix",
    "element_from_vector",
    "frozen_words",
    "lambda_map",
    "load_solution",
    "multipermutation_level",
    "profile",
    "psi",
    "rank_and_basis",
    "retraction",
    "satisfies_condition_C",
    "socle_contains",
    "spanning_set",
    "verify_brace_laws",
]
