"""Identity catalogue, verification engines and Sato's counter-examples."""

from .catalogue import Expr, IdentityEntry, SeriesTemplate, Term, catalogue, get_entry
from .families import CounterexamplePair, family_A, family_B, sato_pairs, sato_suite, verify_family
from .verify import (
    VerificationReport,
    exact_series,
    gamma_ratio,
    instances,
    sweep,
    verify,
    verify_exact,
    verify_numeric,
)

__all__ = [
    "CounterexamplePair",
    "Expr",
    "IdentityEntry",
    "SeriesTemplate",
    "Term",
    "VerificationReport",
    "catalogue",
    "exact_series",
    "family_A",
    "family_B",
    "gamma_ratio",
    "get_entry",
    "instances",
    "sato_pairs",
    "sato_suite",
    "sweep",
    "verify",
    "verify_exact",
    "verify_family",
    "verify_numeric",
]
