"""P-symbols, congruences and identity search for plactic-like monoids."""

from .core import Identity, evaluation, format_word, parse_identity, parse_word, substitute
from .identities import (
    Counterexample,
    NoCounterexample,
    SearchBounds,
    canonical_identity,
    check_identity,
    enumerate_candidates,
    is_balanced,
    shortest_identity_search,
)
from .monoid import ALL_MONOIDS, MonoidId, element, equivalent, multiply, psymbol

__all__ = [
    "ALL_MONOIDS",
    "Counterexample",
    "Identity",
    "MonoidId",
    "NoCounterexample",
    "SearchBounds",
    "canonical_identity",
    "check_identity",
    "element",
    "enumerate_candidates",
    "equivalent",
    "evaluation",
    "format_word",
    "is_balanced",
    "multiply",
    "parse_identity",
    "parse_word",
    "psymbol",
    "shortest_identity_search",
    "substitute",
]
