"""Test-driven early stopping for streaming code generation.

The engine watches a token stream, incrementally extracts candidate function
units, validates them against the object-language toolchain, runs the supplied
test suite, and stops generation as soon as a passing solution exists. The
bench subpackage replays recorded traces to compare plain generation with
suppressed generation.
"""

__version__ = "0.1.0"

from bsup.units import CheckingUnit, ObjectLanguage, detect_complete_units, extract_preamble
from bsup.session import (
    Session,
    SessionResult,
    StopDecision,
    StopKind,
    SuppressionConfig,
    TokenEvent,
    TriggerPolicy,
    run_session,
)

__all__ = [
    "CheckingUnit",
    "ObjectLanguage",
    "Session",
    "SessionResult",
    "StopDecision",
    "StopKind",
    "SuppressionConfig",
    "TokenEvent",
    "TriggerPolicy",
    "detect_complete_units",
    "extract_preamble",
    "run_session",
]
