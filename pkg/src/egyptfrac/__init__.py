"""Exact Egyptian-fraction expansions, gap sequences, and reciprocal-sum recovery.

The package computes greedy, odd-greedy, and pseudo-greedy unit-fraction
expansions of rationals and real quadratic irrationals in exact arithmetic,
gap sequences of rational pseudo-greedy expansions both naively and through
a modular residue-chain algorithm, nearest-integer recovery of doubly
exponential sequences (Sylvester, Millin) from their reciprocal sums, an
exhaustive zero-gap scanner, and the multiplicative random-walk heuristic
for the bookkeeping numerators.
"""

__version__ = "0.1.0"

from .errors import (
    CorruptCheckpoint,
    DepthExceeded,
    EgyptError,
    IoError,
    NegativeBeta,
    NonPositiveInput,
    NotReduced,
    OddGreedyOnIrrational,
    RadicandMismatch,
    RecoveryBreakdown,
    SumExceeds,
)
from .exactnum import (
    QuadraticValue,
    ceil_value,
    floor_value,
    format_value,
    nearest_int,
    parse_value,
    quad_arith,
    quad_nearest_int,
    quad_sign,
    quad_to_decimal,
    rat_nearest_int,
    sign_of,
    to_decimal,
)
from .sequences import (
    GrowthEstimate,
    fib,
    fib_pow2,
    growth_constant,
    sylvester,
    sylvester_terms,
)
from .expansion import (
    Expansion,
    ExpansionKind,
    ExpansionRecord,
    ExpansionStatus,
    GapStep,
    expand,
    gap_sequence_naive,
)
from .gapfast import GapTrace, VerifyReport, gap_sequence_fast, verify_fast_vs_naive
from .recovery import (
    CharacterizationCheck,
    RecoveryRecord,
    recover_sequence,
    threshold,
    verify_characterization,
)
from .scanner import (
    ScanRecord,
    ScanSummary,
    TailDiagnosis,
    diagnose_tail,
    scan_conjecture,
)
from .randwalk import GENERATOR_ID, WalkStats, analytic_drift, simulate_walk

__all__ = [
    "__version__",
    # errors
    "EgyptError",
    "RadicandMismatch",
    "DepthExceeded",
    "NonPositiveInput",
    "OddGreedyOnIrrational",
    "NotReduced",
    "NegativeBeta",
    "SumExceeds",
    "RecoveryBreakdown",
    "CorruptCheckpoint",
    "IoError",
    # exact numbers
    "QuadraticValue",
    "rat_nearest_int",
    "quad_nearest_int",
    "nearest_int",
    "floor_value",
    "ceil_value",
    "quad_sign",
    "sign_of",
    "quad_arith",
    "quad_to_decimal",
    "to_decimal",
    "parse_value",
    "format_value",
    # sequences
    "sylvester",
    "sylvester_terms",
    "fib",
    "fib_pow2",
    "GrowthEstimate",
    "growth_constant",
    # expansions
    "ExpansionKind",
    "ExpansionStatus",
    "ExpansionRecord",
    "Expansion",
    "expand",
    "GapStep",
    "gap_sequence_naive",
    # fast gaps
    "GapTrace",
    "gap_sequence_fast",
    "VerifyReport",
    "verify_fast_vs_naive",
    # recovery
    "RecoveryRecord",
    "CharacterizationCheck",
    "threshold",
    "recover_sequence",
    "verify_characterization",
    # scanner
    "ScanRecord",
    "ScanSummary",
    "TailDiagnosis",
    "scan_conjecture",
    "diagnose_tail",
    # random walk
    "GENERATOR_ID",
    "WalkStats",
    "analytic_drift",
    "simulate_walk",
]
