"""Verified maxima of Grunsky-coefficient bound objectives for bi-univalent functions."""

from .domain import CONSTANTS, REGION, DomainConstants, EdgeId, OmegaRegion, lemma1_bound, omega_contains
from .interval import CLAMP_TOL, Interval, NegativeRadicandError
from .objectives import (
    BoundaryRestrictionId,
    CLAIM_NAMES,
    F1_FORM,
    OBJECTIVES,
    Objective,
    ObjectiveId,
    eval_boundary,
    eval_objective,
    eval_objective_iv,
    grad,
)
from .optimize import (
    BnBConfig,
    CriticalPoint,
    CriticalSearch,
    Extremum,
    Extremum1D,
    NoBracketError,
    UniquenessResult,
    find_root_1d,
    interior_critical_points,
    maximize_1d,
    maximize_2d,
    prove_negative_1d,
    prove_positive_1d,
    verify_uniqueness_1d,
)
from .oracle import (
    BI_UNIVALENT_PRESETS,
    PRESETS,
    GrunskyTable,
    TestVector,
    check_coefficient_identities,
    check_inequalities,
    gamma_from_series,
    grunsky_table,
    parse_coefficients,
)
from .report import ClaimRow, all_passed, emit, run_suite
from .series import BivariateSeries, InsufficientOrderError, PowerSeries, odd_transform

__all__ = [name for name in dir() if not name.startswith("_")]
