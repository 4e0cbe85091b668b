"""Exact torus knot invariants through pinch moves.

The signature, upsilon and the nonorientable genus bound of T(p, q) are
computed both by the classical recursions and by closed formulas in the
pinch data, and checked against a Seifert matrix oracle.
"""
from .classify import (
    Classification,
    Tag,
    batson_family,
    classify,
    counterexample_family,
    example_family,
)
from .core import (
    ConsistencyError,
    ConstraintError,
    DomainError,
    NormalizationError,
    PinchCalcError,
    TorusKnot,
    UnknotError,
    ext_gcd,
    mod_inverse,
    normalize,
)
from .invariants import (
    InvariantReport,
    gap_closed,
    report,
    signature_closed,
    signature_recursive,
    upsilon_closed,
    upsilon_recursive,
    verify_stage_identities,
)
from .oracle import OracleUnavailable, oracle_signature, seifert_matrix
from .pinch import (
    PinchSequence,
    PinchStep,
    RhoTable,
    SeedData,
    pinch_move,
    pinch_sequence,
    rho_table,
    seed_of,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
